#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "klein168/linalg.hpp"

namespace klein {

struct ConjugacyClass {
  long representative = 0;
  std::vector<long> members;
  long size = 0;
  long element_order = 1;
  std::map<long, long> power_class;  // k -> class id of rep^k, for k dividing the exponent
};

// Finite matrix group as an explicit BFS closure with a full multiplication
// table. Element ids follow discovery order, so they are deterministic for a
// fixed generator list. With projective=true the group law is "multiply, then
// rescale so the first nonzero entry is 1".
class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup() = default;

  static FiniteMatrixGroup generate(const std::vector<CycMatrix>& gens, long cap = 100000,
                                    bool projective = false);
  FiniteMatrixGroup projectivize(long cap = 100000) const;
  // Same group with entries rewritten at the smallest common conductor.
  FiniteMatrixGroup minimized_copy() const;

  long order() const { return static_cast<long>(elements_.size()); }
  long dimension() const { return dim_; }
  long conductor() const { return conductor_; }
  bool projective() const { return projective_; }

  const std::vector<CycMatrix>& elements() const { return elements_; }
  const CycMatrix& element(long id) const { return elements_.at(static_cast<size_t>(id)); }
  const std::vector<long>& generator_ids() const { return generator_ids_; }

  long id_of(const CycMatrix& m) const;  // -1 when absent
  long identity_id() const { return 0; }
  long mul(long a, long b) const;
  long inv(long a) const;
  long power(long a, long k) const;
  long element_order(long id) const;
  long exponent() const;
  long scalar_count() const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  long class_count() const { return static_cast<long>(classes_.size()); }
  long class_of(long id) const { return class_of_.at(static_cast<size_t>(id)); }

  static CycMatrix projective_canonical(const CycMatrix& m);

 private:
  void build_tables_();
  void build_classes_();
  long checked_(long id) const;

  long dim_ = 0;
  long conductor_ = 1;
  bool projective_ = false;
  std::vector<CycMatrix> elements_;
  std::vector<long> generator_ids_;
  std::unordered_map<std::string, long> index_;
  std::vector<int32_t> table_;
  std::vector<long> inverse_;
  std::vector<long> order_;
  std::vector<long> class_of_;
  std::vector<ConjugacyClass> classes_;
  std::vector<long> parent_, parent_gen_;
};

struct SubgroupHandle {
  std::vector<long> members;     // sorted element ids in the parent group
  std::vector<long> generators;  // at most 2 ids
  std::string iso_label;
  long order() const { return static_cast<long>(members.size()); }
};

struct SubgroupSearch {
  std::vector<SubgroupHandle> representatives;  // one per conjugacy class of subgroups,
                                                // each the lexicographically least member list
  std::vector<long> class_sizes;                // distinct subgroups per class
  long total_count = 0;
};

// All subgroups of order m generated by at most two elements, up to conjugacy.
SubgroupSearch subgroups_of_order(const FiniteMatrixGroup& g, long m);

// Indices [G:H] <= bound over all discovered subgroups H, including G itself.
std::set<long> transitive_orbit_sizes(const FiniteMatrixGroup& g, long bound);

// Indices of the cyclic subgroups <g> over all elements g.
std::set<long> cyclic_orbit_sizes(const FiniteMatrixGroup& g);

// cover element id -> image element id under projectivization.
std::vector<long> projection_map(const FiniteMatrixGroup& cover, const FiniteMatrixGroup& image);

struct PreimageResult {
  SubgroupHandle full;     // order 2|H|
  SubgroupHandle minimal;  // smallest subgroup of the cover surjecting onto H
};
PreimageResult preimage_in_cover(const FiniteMatrixGroup& cover, const FiniteMatrixGroup& image,
                                 const std::vector<long>& proj, const SubgroupHandle& h);

struct GroupFingerprint {
  long order = 0;
  std::map<long, long> order_histogram;
  long center = 0;
  long abelianization = 0;
};
GroupFingerprint fingerprint_of(const FiniteMatrixGroup& parent, const std::vector<long>& members);
std::string label_for_fingerprint(const GroupFingerprint& f);
std::string iso_label(const FiniteMatrixGroup& parent, const std::vector<long>& members);

// Closure of a member set inside the parent's multiplication table; returns the
// sorted member ids, or an empty vector once the closure exceeds cap.
std::vector<long> span_in_group(const FiniteMatrixGroup& g, std::vector<long> seed, long cap);

// Data file with lines: comments (#...), "conductor N", then repeated
// "matrix R C" headers followed by R rows of ';'-separated entries.
std::vector<CycMatrix> load_generator_file(const std::string& path);
std::string data_file(const std::string& name);

}  // namespace klein
