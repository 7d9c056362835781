#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace godeaux::wahl {

// [b1,...,bs], all entries >= 2
struct HJChain {
  std::vector<long> entries;
};

struct CyclicQuotient {
  long m = 0;
  long q = 0;
  long canonical_q = 0;  // min(q, q^{-1} mod m)
};

struct WahlData {
  long n = 0;
  long a = 0;
};

// continued fraction expansion of m/q with all partial quotients >= 2
HJChain hj_expand(long m, long q);
// inverse: value of the chain as a reduced fraction (m, q)
std::pair<long, long> hj_value(const HJChain& chain);

CyclicQuotient cyclic_quotient(long m, long q);

// (n, a) when the chain resolves a singularity of type 1/n^2(1, na-1),
// reading the chain in either orientation
std::optional<WahlData> is_wahl(const HJChain& chain);

// all Wahl chains of length <= max_len, grown from [4] by the two moves
// [b1..bs] -> [b1+1,..,bs,2] and [b1..bs] -> [2,b1,..,bs+1];
// both orientations appear when they differ as sequences
std::vector<HJChain> wahl_enumerate(int max_len);

// exact solutions a of M a = (b1-2,...,bs-2), M the chain intersection
// matrix; these are the discrepancies of the contraction
std::vector<mpq_class> discrepancies(const HJChain& chain);

// One curve in a configuration fixture.
struct CurveDecl {
  std::string name;
  long self_int = -2;
};

// A curve kept after contraction, checked for positivity against the
// pulled-back canonical class. `meets` lists (chain member name, multiplicity).
struct ExtraCurve {
  std::string name;
  long self_int = -1;
  std::vector<std::pair<std::string, long>> meets;
  bool assumed = false;  // incidence read off a figure rather than prose
};

struct CurveConfig {
  std::string name;
  long kx2 = 0;  // K_X^2 of the resolution
  std::vector<CurveDecl> curves;
  std::vector<std::vector<std::string>> chains;  // ordered member names
  std::vector<ExtraCurve> extras;
};

struct ChainReport {
  std::vector<long> entries;
  long m = 0, q = 0, canonical_q = 0;
  std::optional<WahlData> wahl;
  std::vector<mpq_class> discrepancies;
  std::string label;  // e.g. "1/49(1,20)"
};

struct ContractionReport {
  std::string config_name;
  std::vector<ChainReport> chains;
  mpq_class kw2;
  std::vector<std::pair<std::string, mpq_class>> pullback_values;  // per extra curve
  bool ample = false;  // all listed pullback values > 0
};

ContractionReport contraction_report(const CurveConfig& config);

struct DnmSearch {
  long max_n = 12;
  long max_m = 12;
  bool index_parity_rule = true;  // exclusion for gcd(n,m)=1 and odd chain index
};

struct DnmCandidate {
  long n = 0, m = 0, d = 0;
};

// degree bookkeeping for elliptic fibrations with two multiple fibers:
// lambda = 1 - 1/n - 1/m must clear kc_value into an integer d with n|d, m|d,
// gcd(n,m) in {1,2}; for coprime (n,m) an odd chain index excludes the pair
std::vector<DnmCandidate> dnm_feasible(long kc_value, long chain_index, const DnmSearch& search);

// the contraction configurations used by the checker: the theorem cases with
// one chain each, then the three two-chain figure configurations
std::vector<CurveConfig> standard_fixtures();

std::string chain_str(const HJChain& chain);

}  // namespace godeaux::wahl
