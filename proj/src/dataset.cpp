#include "hyppants/dataset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hyppants/error.hpp"

namespace hyppants {

namespace {

bool is_unit(int c, int m) { return m >= 2 && c >= 1 && c < m && std::gcd(c, m) == 1; }

long long lcm_of(const std::vector<int>& orders, std::size_t skip) {
  long long acc = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i == skip) continue;
    acc = std::lcm(acc, static_cast<long long>(orders[i]));
  }
  return acc;
}

// Pattern of a non-free rotation: (s,n),(n-s,n) repeated, one pair if n > 2.
bool is_rotational_cone_list(const DataSet& d) {
  const auto& cone = d.cone;
  if (cone.empty() || cone.size() % 2 != 0) return false;
  for (const auto& c : cone)
    if (c.order != d.n) return false;
  if (d.n > 2) {
    if (cone.size() != 2) return false;
    return (cone[0].residue + cone[1].residue) % d.n == 0;
  }
  // n == 2: every residue is 1, any number of pairs
  return true;
}

}  // namespace

std::string to_string(ActionClass c) {
  switch (c) {
    case ActionClass::RotationalFree: return "RotationalFree";
    case ActionClass::RotationalNonFree: return "RotationalNonFree";
    case ActionClass::Type1Irreducible: return "Type1Irreducible";
    case ActionClass::Type1Reducible: return "Type1Reducible";
    case ActionClass::Type2: return "Type2";
  }
  return "?";
}

std::optional<int> try_genus(const DataSet& d) {
  if (d.n < 1) return std::nullopt;
  // 2 - 2g = n (2 - 2 g0) + sum (n/m - n), computed as an exact fraction.
  long long num = static_cast<long long>(d.n) * (2 - 2 * d.g0);
  long long den = 1;
  for (const auto& c : d.cone) {
    if (c.order < 1) return std::nullopt;
    // add n/m - n
    long long a = static_cast<long long>(d.n) - static_cast<long long>(d.n) * c.order;
    long long b = c.order;
    num = num * b + a * den;
    den *= b;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  if (num % den != 0) return std::nullopt;
  long long chi = num / den;
  if ((2 - chi) % 2 != 0) return std::nullopt;
  long long g = (2 - chi) / 2;
  if (g < 0) return std::nullopt;
  return static_cast<int>(g);
}

int genus(const DataSet& d) {
  auto g = try_genus(d);
  if (!g) throw verification_failure("NonIntegralGenus", "genus of " + to_string(d) + " is not a non-negative integer");
  return *g;
}

Validation validate(const DataSet& raw) {
  Validation out;
  auto& v = out.violations;
  if (raw.n < 2) v.push_back("degree");
  if (raw.g0 < 0) v.push_back("g0");
  if (raw.r < 0 || (raw.n >= 2 && raw.r >= raw.n)) v.push_back("r-range");

  bool units_ok = true;
  for (const auto& c : raw.cone) {
    if (!is_unit(c.residue, c.order)) units_ok = false;
  }
  if (!units_ok) v.push_back("unit");

  // (i)
  bool cond_i = (raw.r > 0) == raw.cone.empty();
  if (raw.r > 0 && raw.n >= 2 && std::gcd(raw.r, raw.n) != 1) cond_i = false;
  if (!cond_i) v.push_back("i");

  // (ii)
  bool cond_ii = true;
  for (const auto& c : raw.cone)
    if (c.order < 1 || raw.n < 1 || raw.n % c.order != 0) cond_ii = false;
  if (!cond_ii) v.push_back("ii");

  // (iii) is only constrained for g0 = 0.
  if (raw.g0 == 0 && !raw.cone.empty()) {
    std::vector<int> orders;
    for (const auto& c : raw.cone) orders.push_back(c.order);
    bool cond_iii = std::all_of(orders.begin(), orders.end(), [](int m) { return m >= 1; });
    for (std::size_t i = 0; cond_iii && i < orders.size(); ++i)
      if (lcm_of(orders, i) != raw.n) cond_iii = false;
    if (!cond_iii) v.push_back("iii");
  }

  // (iv)
  if (cond_ii && raw.n >= 1) {
    long long sum = 0;
    for (const auto& c : raw.cone) sum += static_cast<long long>(raw.n / c.order) * c.residue;
    if (sum % raw.n != 0) v.push_back("iv");
  } else if (!raw.cone.empty()) {
    v.push_back("iv");
  }

  if (!try_genus(raw)) v.push_back("genus");

  if (v.empty()) out.data_set = raw;
  return out;
}

DataSet validated(const DataSet& raw) {
  auto res = validate(raw);
  if (res.ok()) return *res.data_set;
  std::string list;
  for (const auto& s : res.violations) list += (list.empty() ? "" : ",") + s;
  throw invalid_input("Invalid", to_string(raw) + " is not a data set; violated: " + list);
}

ActionClass classify(const DataSet& d) {
  if (d.cone.empty()) return ActionClass::RotationalFree;
  if (is_rotational_cone_list(d)) return ActionClass::RotationalNonFree;
  bool has_full_order =
      std::any_of(d.cone.begin(), d.cone.end(), [&](const ConeDatum& c) { return c.order == d.n; });
  if (d.cone.size() == 3 && has_full_order) {
    return d.g0 == 0 ? ActionClass::Type1Irreducible : ActionClass::Type1Reducible;
  }
  return ActionClass::Type2;
}

DataSet canonical_type1(DataSet d) {
  std::sort(d.cone.begin(), d.cone.end(), [](const ConeDatum& a, const ConeDatum& b) {
    return a.order != b.order ? a.order < b.order : a.residue < b.residue;
  });
  return d;
}

std::vector<DataSet> enumerate_irreducible_type1(int g) {
  if (g < 2) throw invalid_input("Precondition", "enumeration requires genus >= 2");
  return enumerate_irreducible_type1(g, 4 * g + 2);
}

std::vector<DataSet> enumerate_irreducible_type1(int g, int max_degree) {
  if (g < 2) throw invalid_input("Precondition", "enumeration requires genus >= 2");
  std::vector<DataSet> out;
  for (int n = 2; n <= max_degree; ++n) {
    std::vector<int> divisors;
    for (int m = 2; m <= n; ++m)
      if (n % m == 0) divisors.push_back(m);
    for (int n1 : divisors) {
      for (int n2 : divisors) {
        if (n2 < n1) continue;
        // Riemann-Hurwitz: 2 - 2g = n (-1 + 1/n1 + 1/n2 + 1/n)
        long long chi = -static_cast<long long>(n) + n / n1 + n / n2 + 1;
        if (chi != 2 - 2 * g) continue;
        for (int c1 = 1; c1 < n1; ++c1) {
          if (std::gcd(c1, n1) != 1) continue;
          for (int c2 = 1; c2 < n2; ++c2) {
            if (std::gcd(c2, n2) != 1) continue;
            if (n1 == n2 && c2 < c1) continue;
            for (int c3 = 1; c3 < n; ++c3) {
              if (std::gcd(c3, n) != 1) continue;
              if (n2 == n && c3 < c2) continue;
              DataSet d{n, 0, 0, {{c1, n1}, {c2, n2}, {c3, n}}};
              if (!validate(d).ok()) continue;
              out.push_back(canonical_type1(d));
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const DataSet& d) {
  std::ostringstream os;
  os << "(" << d.n << "," << d.g0;
  if (d.r > 0) os << "," << d.r;
  os << ";";
  for (std::size_t i = 0; i < d.cone.size(); ++i)
    os << (i ? "," : "") << "(" << d.cone[i].residue << "," << d.cone[i].order << ")";
  os << ")";
  return os.str();
}

nlohmann::json to_json(const DataSet& d) {
  nlohmann::json cone = nlohmann::json::array();
  for (const auto& c : d.cone) cone.push_back({c.residue, c.order});
  return {{"n", d.n}, {"g0", d.g0}, {"r", d.r}, {"cone", cone}};
}

DataSet data_set_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw invalid_input("Schema", "data set must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "n" && key != "g0" && key != "r" && key != "cone")
      throw invalid_input("Schema", "unknown field '" + key + "' in data set");
  }
  auto get_int = [&](const char* key, bool required) -> int {
    if (!j.contains(key)) {
      if (required) throw invalid_input("Schema", std::string("missing field '") + key + "'");
      return 0;
    }
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw invalid_input("Schema", std::string("field '") + key + "' must be an integer");
    return v.get<int>();
  };
  DataSet d;
  d.n = get_int("n", true);
  d.g0 = get_int("g0", true);
  d.r = get_int("r", false);
  if (j.contains("cone")) {
    const auto& cone = j.at("cone");
    if (!cone.is_array()) throw invalid_input("Schema", "'cone' must be an array");
    for (const auto& entry : cone) {
      if (!entry.is_array() || entry.size() != 2)
        throw invalid_input("Schema", "cone entries must be [c,m] or [[c,m],multiplicity]");
      if (entry[0].is_array()) {
        const auto& pair = entry[0];
        if (pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer() ||
            !entry[1].is_number_integer())
          throw invalid_input("Schema", "malformed multiplicity cone entry");
        int alpha = entry[1].get<int>();
        if (alpha < 1) throw invalid_input("Schema", "cone multiplicity must be positive");
        for (int a = 0; a < alpha; ++a) d.cone.push_back({pair[0].get<int>(), pair[1].get<int>()});
      } else {
        if (!entry[0].is_number_integer() || !entry[1].is_number_integer())
          throw invalid_input("Schema", "cone entries must hold integers");
        d.cone.push_back({entry[0].get<int>(), entry[1].get<int>()});
      }
    }
  }
  return d;
}

}  // namespace hyppants
