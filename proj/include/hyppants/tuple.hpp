#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyppants/curve_system.hpp"

namespace hyppants {

// Surjection {1..2g} -> {1..g} with two-element fibers, stored as values[0..2g-1].
struct CanonicalTuple {
  std::vector<int> values;

  int genus() const { return static_cast<int>(values.size()) / 2; }
  int operator()(int position) const { return values[position - 1]; }  // 1-based

  friend auto operator<=>(const CanonicalTuple&, const CanonicalTuple&) = default;
};

// Throws Error(InvalidInput, "NotCanonical").
CanonicalTuple make_tuple(std::vector<int> values);
bool is_canonical(const std::vector<int>& values);
std::string to_string(const CanonicalTuple& f);

enum class EquivalenceMove { Reversal, SwapFirst, SwapLast, PartitionRelabel };
std::string to_string(EquivalenceMove m);

// Reversal: f o sigma_0 with sigma_0(i) = 2g+1-i. SwapFirst: f o (1 2).
// SwapLast: f o (2g-1 2g). PartitionRelabel: first-appearance relabelling,
// the representative of the fiber partition.
CanonicalTuple apply(const CanonicalTuple& f, EquivalenceMove m);
CanonicalTuple normalized(const CanonicalTuple& f);

// Fibers as sorted 1-based position pairs, sorted by first position.
std::vector<std::array<int, 2>> fiber_partition(const CanonicalTuple& f);

// 0-based images: sigma[x] = sigma(x+1) - 1.
using Permutation = std::vector<int>;

long inversion_length(const Permutation& sigma);
// f o sigma.
CanonicalTuple compose(const CanonicalTuple& f, const Permutation& sigma);
// Every sigma with f2 = f1 o sigma.
std::vector<Permutation> connecting_permutations(const CanonicalTuple& f1, const CanonicalTuple& f2);
// Minimum inversion_length over connecting_permutations. Throws
// Error(InvalidInput, "GenusMismatch") on different lengths.
long tuple_distance(const CanonicalTuple& f1, const CanonicalTuple& f2);

// Closure of {f} under the four moves, each of which is invertible.
// Throws Error(InvalidInput, "OrbitBudgetExceeded") past `orbit_cap` members.
std::set<CanonicalTuple> class_members(const CanonicalTuple& f, std::size_t orbit_cap = 1000000);
// Normalized members; one per fiber partition in the class.
std::set<CanonicalTuple> class_partitions(const CanonicalTuple& f, std::size_t orbit_cap = 1000000);
// Smallest normalized member; equal keys iff equivalent.
CanonicalTuple class_key(const CanonicalTuple& f, std::size_t orbit_cap = 1000000);
bool equivalent(const CanonicalTuple& f1, const CanonicalTuple& f2, std::size_t orbit_cap = 1000000);
// Class distance, computed over fiber partitions and value relabellings.
long class_distance(const CanonicalTuple& f1, const CanonicalTuple& f2, std::size_t orbit_cap = 1000000);

// Case split of the block arrangement: "1a" (n1 even), "1b" (n1 odd),
// "2a" (4g-gon), "2b" (4g+2-gon).
std::string arrangement_case(const Polygon& p);

// Tuple read off the fixed block order of cases 2a and 2b:
// 2a: R_g R_{g+1} R_{g-1} R_{g+2} ... R_1 R_{2g};
// 2b: R_{g+1} R_g R_{g+2} ... R_1 R_{2g+1}, with the self-glued R_{g+1} omitted.
// Regions glued to each other share a value. Throws UnhandledCase for case 1.
CanonicalTuple region_sequence_tuple(const Polygon& p);

// A linear arrangement of the pants: a Hamiltonian path through the dual
// graph. The g curves off the path are the handles; each contributes two
// boundary slots, read along the path.
struct ChainEncoding {
  CanonicalTuple tuple;
  std::vector<int> chain;    // pants components in path order
  std::vector<int> links;    // curve indices joining consecutive pants
  std::vector<int> handles;  // curve index for tuple value 1..g
};

// Every chain of a verified decomposition, in a fixed order.
std::vector<ChainEncoding> chain_encodings(const CurveSystem& cs, const PantsDecomposition& pd);

struct TupleEncoding {
  std::string arrangement;
  ChainEncoding chosen;  // smallest class key among the chains
  std::size_t chains = 0;
  std::size_t classes = 0;  // distinct classes over all chains
  std::optional<CanonicalTuple> region_sequence;  // cases 2a and 2b
};

// Throws Error(Verification, "UnhandledCase") with the case trace when the
// polygon fits no case or the dual graph has no Hamiltonian path, and
// Error(Verification, "NotPants") for an unverified decomposition.
TupleEncoding from_pants(const CurveSystem& cs, const PantsDecomposition& pd);

nlohmann::json tuple_report(const CanonicalTuple& f, std::size_t class_size = 0);
nlohmann::json encoding_report(const CurveSystem& cs, const PantsDecomposition& pd, const TupleEncoding& e);

}  // namespace hyppants
