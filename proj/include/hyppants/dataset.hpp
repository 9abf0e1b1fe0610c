#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyppants {

// A cone point of the quotient orbifold: branch order `order` with local
// rotation residue `residue` (a unit mod `order`).
struct ConeDatum {
  int residue = 0;
  int order = 0;

  friend bool operator==(const ConeDatum&, const ConeDatum&) = default;
  friend auto operator<=>(const ConeDatum&, const ConeDatum&) = default;
};

// Conjugacy class of a cyclic action of degree n on a closed surface:
// (n, g0, r; (c_1, m_1), ..., (c_l, m_l)). r is nonzero only for free actions.
struct DataSet {
  int n = 0;
  int g0 = 0;
  int r = 0;
  std::vector<ConeDatum> cone;

  friend bool operator==(const DataSet&, const DataSet&) = default;
  friend auto operator<=>(const DataSet&, const DataSet&) = default;
};

enum class ActionClass {
  RotationalFree,
  RotationalNonFree,
  Type1Irreducible,
  Type1Reducible,
  Type2,
};

std::string to_string(ActionClass c);

// Result of validate(): either a data set or the list of violated conditions.
// Condition tags: "degree", "g0", "r-range", "unit", "i", "ii", "iii", "iv",
// "genus".
struct Validation {
  std::optional<DataSet> data_set;
  std::vector<std::string> violations;

  bool ok() const { return data_set.has_value(); }
};

Validation validate(const DataSet& raw);

// Throws Error(InvalidInput, "Invalid") listing every violation.
DataSet validated(const DataSet& raw);

// Genus from the Riemann-Hurwitz relation
//   (2 - 2g)/n = 2 - 2 g0 + sum (1/m_j - 1).
// Returns nullopt when g is not a non-negative integer.
std::optional<int> try_genus(const DataSet& d);
int genus(const DataSet& d);

ActionClass classify(const DataSet& d);

// Orders the cone list of a three-point data set as (c1,n1),(c2,n2),(c3,n)
// with n1 <= n2 <= n, ties broken by residue.
DataSet canonical_type1(DataSet d);

// All valid data sets (n, 0; (c1,n1), (c2,n2), (c3,n)) of genus g, in
// canonical form, sorted. Throws InvalidInput for g < 2.
std::vector<DataSet> enumerate_irreducible_type1(int g);

// Same search with an explicit cap on n (used to probe past 4g+2).
std::vector<DataSet> enumerate_irreducible_type1(int g, int max_degree);

std::string to_string(const DataSet& d);

// JSON form {"n":8,"g0":0,"r":0,"cone":[[1,2],[1,8],[3,8]]}. The cone list
// also accepts the multiplicity spelling [[c,m],alpha] which is expanded.
// Unknown fields are rejected.
nlohmann::json to_json(const DataSet& d);
DataSet data_set_from_json(const nlohmann::json& j);

}  // namespace hyppants
