#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klein168/groups.hpp"

namespace klein {

// Value list indexed by conjugacy class id of the referenced group.
struct ClassFunction {
  const FiniteMatrixGroup* group = nullptr;
  std::vector<CycNum> values;

  const CycNum& at_class(long c) const { return values.at(static_cast<size_t>(c)); }
  CycNum dimension() const;
};

ClassFunction trivial_character(const FiniteMatrixGroup& g);
// Trace of each class representative in the defining matrix model.
ClassFunction character_of(const FiniteMatrixGroup& g);

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b);
ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b);
// Pointwise product, the character of the tensor product.
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);
// Value-wise complex conjugate, the character of the dual.
ClassFunction dual(const ClassFunction& a);

CycNum inner(const ClassFunction& a, const ClassFunction& b);

// Newton recurrences over the power maps of the classes.
ClassFunction sym_power(const ClassFunction& chi, long k);
ClassFunction ext_power(const ClassFunction& chi, long k);

struct CharacterTable {
  const FiniteMatrixGroup* group = nullptr;
  std::vector<std::string> labels;
  std::vector<ClassFunction> rows;
  std::vector<long> column_order;  // class ids in presentation order
  bool complete = false;

  long index_of(const std::string& label) const;
  const ClassFunction& row(const std::string& label) const;
  // rows x columns value grid in presentation order
  std::vector<std::vector<CycNum>> grid() const;
};

// Multiplicity of each table row in chi; throws math_error unless every
// multiplicity is a non-negative integer and the rows cover chi exactly.
std::vector<long> decompose(const ClassFunction& chi, const CharacterTable& table);
std::optional<std::vector<long>> try_decompose(const ClassFunction& chi, const CharacterTable& table);

// The six irreducible characters of the order-168 group, built from the
// degree-3 character w3: I, W3, W3v = dual, W6 = Sym^2 W3,
// W7 = Sym^3 W3v - W3, W8 = W7 (x) W3v - W6 - W7. Throws unless every row has
// norm 1 and both orthogonality relations hold.
CharacterTable build_psl_table(const FiniteMatrixGroup& g, const ClassFunction& w3);
CharacterTable build_psl_table(const FiniteMatrixGroup& g);

// Eight rows on the order-336 cover: the six rows above pulled back along the
// projection (classes matched by element order, the two order-7 fibres by the
// trace convention), U4 re-derived from traces, U8 fixed data validated by
// norm and orthogonality.
CharacterTable build_cover_table(const FiniteMatrixGroup& cover, const CharacterTable& psl);

struct FusionMap {
  std::vector<long> to_parent_class;  // subgroup class id -> parent class id
};

FiniteMatrixGroup subgroup_as_group(const FiniteMatrixGroup& parent, const SubgroupHandle& h);
FusionMap fusion_map(const FiniteMatrixGroup& parent, const FiniteMatrixGroup& sub);
ClassFunction restrict_cf(const ClassFunction& chi, const FiniteMatrixGroup& sub, const FusionMap& f);

// Irreducible table of a subgroup from the bundled catalog (cyclic groups,
// Z2xZ2, S3, D4, A4, S4, Z7:Z3 and the 2.X covers), classes matched by order,
// size and power maps, then validated by both orthogonality relations and an
// integral decomposition of the defining character.
CharacterTable catalog_table(const FiniteMatrixGroup& sub);

struct RestrictionSummary {
  std::vector<std::string> labels;  // table rows of the subgroup
  std::vector<long> dims;
  std::vector<long> multiplicities;
  CycNum norm;  // inner(chi|H, chi|H)
};

RestrictionSummary restrict_and_decompose(const ClassFunction& chi, const FiniteMatrixGroup& parent,
                                          const SubgroupHandle& h);

std::string group_label(const FiniteMatrixGroup& g);

}  // namespace klein
