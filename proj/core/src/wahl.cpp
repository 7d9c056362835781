#include "godeaux/wahl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "godeaux/error.hpp"
#include "godeaux/scalarmat.hpp"

namespace godeaux::wahl {

namespace {

void check_chain(const HJChain& c) {
  if (c.entries.empty()) throw UsageError("empty chain");
  for (long b : c.entries)
    if (b < 2) throw UsageError("chain entries must be >= 2");
}

long mod_inverse(long q, long m) {
  long t = 0, newt = 1, r = m, newr = ((q % m) + m) % m;
  while (newr != 0) {
    long k = r / newr;
    std::swap(t -= k * newt, newt);
    std::swap(r -= k * newr, newr);
  }
  if (r != 1) throw UsageError("not invertible");
  return ((t % m) + m) % m;
}

}  // namespace

HJChain hj_expand(long m, long q) {
  if (!(0 < q && q < m)) throw UsageError("need 0 < q < m");
  if (std::gcd(m, q) != 1) throw UsageError("m and q must be coprime");
  HJChain c;
  while (q > 0) {
    long b = (m + q - 1) / q;  // ceil(m/q)
    c.entries.push_back(b);
    long nq = b * q - m;
    m = q;
    q = nq;
  }
  return c;
}

std::pair<long, long> hj_value(const HJChain& chain) {
  check_chain(chain);
  long m = chain.entries.back(), q = 1;
  for (auto it = chain.entries.rbegin() + 1; it != chain.entries.rend(); ++it) {
    long nm = *it * m - q;
    q = m;
    m = nm;
  }
  return {m, q};
}

CyclicQuotient cyclic_quotient(long m, long q) {
  if (!(0 < q && q < m) || std::gcd(m, q) != 1) throw UsageError("invalid cyclic quotient data");
  long inv = mod_inverse(q, m);
  return CyclicQuotient{m, q, std::min(q, inv)};
}

std::optional<WahlData> is_wahl(const HJChain& chain) {
  auto [m, q] = hj_value(chain);
  long n = 1;
  while (n * n < m) ++n;
  if (n * n != m || n < 2) return std::nullopt;
  for (long cand : {q, mod_inverse(q, m)}) {
    if ((cand + 1) % n) continue;
    long a = (cand + 1) / n;
    if (0 < a && a < n && std::gcd(n, a) == 1) return WahlData{n, a};
  }
  return std::nullopt;
}

std::vector<HJChain> wahl_enumerate(int max_len) {
  if (max_len < 1) throw UsageError("max_len must be >= 1");
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> frontier{{4}};
  if (max_len >= 1) seen.insert({4});
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (auto& c : frontier) {
      if (static_cast<int>(c.size()) + 1 > max_len) continue;
      std::vector<long> grow = c;
      grow.front() += 1;
      grow.push_back(2);
      std::vector<long> prepend;
      prepend.reserve(c.size() + 1);
      prepend.push_back(2);
      prepend.insert(prepend.end(), c.begin(), c.end());
      prepend.back() += 1;
      for (auto& cand : {grow, prepend})
        if (seen.insert(cand).second) next.push_back(cand);
    }
    frontier = std::move(next);
  }
  std::vector<HJChain> out;
  std::vector<std::vector<long>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (auto& c : sorted) out.push_back(HJChain{c});
  return out;
}

std::vector<mpq_class> discrepancies(const HJChain& chain) {
  check_chain(chain);
  using algebra::Field;
  using algebra::Scalar;
  using algebra::ScalarMat;
  Field f = Field::rationals();
  std::size_t s = chain.entries.size();
  ScalarMat m(s, s, f);
  std::vector<Scalar> rhs;
  for (std::size_t i = 0; i < s; ++i) {
    m.at(i, i) = Scalar::from_int(-chain.entries[i], f);
    if (i + 1 < s) {
      m.at(i, i + 1) = Scalar::one(f);
      m.at(i + 1, i) = Scalar::one(f);
    }
    rhs.push_back(Scalar::from_int(chain.entries[i] - 2, f));
  }
  auto sol = m.solve(rhs, true);
  if (sol.status != algebra::SolveStatus::ok)
    throw MathError("chain intersection matrix is singular");
  std::vector<mpq_class> out;
  for (auto& x : sol.x) out.push_back(x.rat());
  return out;
}

ContractionReport contraction_report(const CurveConfig& config) {
  std::map<std::string, long> self_int;
  for (auto& c : config.curves) {
    if (!self_int.emplace(c.name, c.self_int).second)
      throw UsageError("duplicate curve " + c.name);
  }
  ContractionReport rep;
  rep.config_name = config.name;
  rep.kw2 = mpq_class(config.kx2);

  // discrepancy per chain member, keyed by name
  std::map<std::string, mpq_class> disc;
  for (auto& members : config.chains) {
    HJChain chain;
    for (auto& name : members) {
      auto it = self_int.find(name);
      if (it == self_int.end()) throw UsageError("chain member " + name + " not declared");
      chain.entries.push_back(-it->second);
    }
    check_chain(chain);
    auto [m, q] = hj_value(chain);
    CyclicQuotient cq = cyclic_quotient(m, q);
    ChainReport cr;
    cr.entries = chain.entries;
    cr.m = m;
    cr.q = q;
    cr.canonical_q = cq.canonical_q;
    cr.wahl = is_wahl(chain);
    cr.discrepancies = discrepancies(chain);
    cr.label = "1/" + std::to_string(m) + "(1," + std::to_string(cq.canonical_q) + ")";
    // K_W^2 = (K_X - sum a_i E_i)^2 = K_X^2 - a . (b-2)
    for (std::size_t i = 0; i < members.size(); ++i) {
      rep.kw2 -= cr.discrepancies[i] * mpq_class(chain.entries[i] - 2);
      if (!disc.emplace(members[i], cr.discrepancies[i]).second)
        throw UsageError("curve " + members[i] + " appears in two chains");
    }
    rep.chains.push_back(std::move(cr));
  }

  bool all_positive = true;
  for (auto& extra : config.extras) {
    // smooth rational: K_X . C = -2 - C^2
    mpq_class value(-2 - extra.self_int);
    for (auto& [member, mult] : extra.meets) {
      auto it = disc.find(member);
      if (it == disc.end())
        throw UsageError("extra curve " + extra.name + " meets non-chain curve " + member);
      value -= it->second * mpq_class(mult);
    }
    if (value <= 0) all_positive = false;
    rep.pullback_values.emplace_back(extra.name, value);
  }
  rep.ample = all_positive;
  return rep;
}

std::vector<DnmCandidate> dnm_feasible(long kc_value, long chain_index, const DnmSearch& search) {
  if (kc_value < 1) throw UsageError("kc_value must be positive");
  std::vector<DnmCandidate> out;
  for (long n = 2; n <= search.max_n; ++n) {
    for (long m = n; m <= search.max_m; ++m) {
      long g = std::gcd(n, m);
      if (g != 1 && g != 2) continue;
      long num = n * m - n - m;  // lambda = num / (n m)
      if (num <= 0) continue;
      long dn = kc_value * n * m;
      if (dn % num) continue;
      long d = dn / num;
      if (d % n || d % m) continue;
      if (g == 1 && search.index_parity_rule && (chain_index % 2)) continue;
      out.push_back(DnmCandidate{n, m, d});
    }
  }
  return out;
}

std::vector<CurveConfig> standard_fixtures() {
  std::vector<CurveConfig> out;
  auto single = [](std::string name, long kx2, std::vector<long> bs,
                   std::vector<ExtraCurve> extras) {
    CurveConfig c;
    c.name = std::move(name);
    c.kx2 = kx2;
    std::vector<std::string> members;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      std::string nm = "M" + std::to_string(i + 1);
      c.curves.push_back({nm, -bs[i]});
      members.push_back(nm);
    }
    c.chains.push_back(members);
    for (auto& e : extras) c.curves.push_back({e.name, e.self_int});
    c.extras = std::move(extras);
    return c;
  };

  // one-chain cases of the theorem; extras follow its prose
  out.push_back(single("A1", 0, {4}, {}));
  out.push_back(single("A2", 0, {4}, {}));
  out.push_back(single("A3", 0, {4}, {}));
  out.push_back(single("A4", -1, {5, 2}, {{"X1", -1, {{"M1", 2}}, false}}));
  out.push_back(single("A5", -2, {3, 5, 2}, {}));
  out.push_back(single("B1", -1, {5, 2}, {{"X1", -1, {{"M1", 3}}, false}}));
  out.push_back(single("B2", -2, {2, 5, 3},
                       {{"X1", -1, {{"M2", 2}}, false},
                        {"X2", -1, {{"M2", 1}, {"M3", 1}}, false}}));
  out.push_back(single("B3", -2, {6, 2, 2},
                       {{"X1", -1, {{"M1", 2}}, false}, {"X2", -1, {{"M1", 2}}, false}}));
  out.push_back(single("B4", -3, {2, 6, 2, 3},
                       {{"X1", -1, {{"M1", 1}, {"M2", 1}}, false},
                        {"X2", -1, {{"M2", 1}, {"M4", 1}}, false}}));
  out.push_back(single("B5", -3, {3, 5, 3, 2},
                       {{"X1", -1, {{"M1", 1}, {"M2", 1}}, false},
                        {"X2", -1, {{"M2", 1}, {"M4", 1}}, false}}));
  out.push_back(single("B6", -4, {2, 2, 3, 5, 4},
                       {{"X1", -1, {{"M1", 1}, {"M4", 1}}, false},
                        {"X2", -1, {{"M5", 2}}, false}}));
  out.push_back(single("B7", -4, {2, 2, 6, 2, 4},
                       {{"X1", -1, {{"M1", 1}, {"M3", 1}}, false},
                        {"X2", -1, {{"M5", 2}}, false}}));

  // two-chain figure configurations; incidences beyond "connects the ends"
  // are read off the figures and marked assumed
  {
    CurveConfig c;
    c.name = "figure4";
    c.kx2 = -5;
    c.curves = {{"E1", -2}, {"B", -6}, {"C", -2}, {"D", -3},
                {"A", -5}, {"E3", -2}, {"E2", -1}, {"E4", -1}, {"E5", -1}};
    c.chains = {{"E1", "B", "C", "D"}, {"A", "E3"}};
    c.extras = {{"E2", -1, {{"E1", 1}, {"A", 1}}, false},
                {"E4", -1, {{"E3", 1}, {"B", 1}}, true},
                {"E5", -1, {{"B", 1}, {"D", 1}}, true}};
    out.push_back(std::move(c));
  }
  {
    CurveConfig c;
    c.name = "figure5";
    c.kx2 = -6;
    c.curves = {{"E1", -2}, {"A", -3}, {"B", -5}, {"E3", -3},
                {"E4", -2}, {"D", -5}, {"C", -3}, {"E2", -1}, {"E5", -1}, {"E6", -1}};
    c.chains = {{"E1", "A", "B", "E3"}, {"E4", "D", "C"}};
    c.extras = {{"E2", -1, {{"E1", 1}, {"B", 1}}, true},
                {"E5", -1, {{"E3", 1}, {"E4", 1}}, true},
                {"E6", -1, {{"D", 1}, {"C", 1}}, true}};
    out.push_back(std::move(c));
  }
  {
    CurveConfig c;
    c.name = "figure6";
    c.kx2 = -7;
    c.curves = {{"E2", -2}, {"E1", -2}, {"A", -6},
                {"E5", -2}, {"E4", -2}, {"B", -6}, {"C", -2}, {"D", -4},
                {"E3", -1}, {"E6", -1}, {"E7", -1}};
    c.chains = {{"E2", "E1", "A"}, {"E5", "E4", "B", "C", "D"}};
    c.extras = {{"E3", -1, {{"E2", 1}, {"B", 1}}, true},
                {"E6", -1, {{"A", 1}, {"E5", 1}}, true},
                {"E7", -1, {{"D", 2}}, false}};
    out.push_back(std::move(c));
  }
  return out;
}

std::string chain_str(const HJChain& chain) {
  std::string s = "[";
  for (std::size_t i = 0; i < chain.entries.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(chain.entries[i]);
  }
  return s + "]";
}

}  // namespace godeaux::wahl
