#ifndef GRIDSHARE_CASEGEN_HPP
#define GRIDSHARE_CASEGEN_HPP

#include <string>
#include <vector>

#include "gridshare/case.hpp"

namespace gridshare {

// Synthetic load / PV / price series: diurnal sinusoid plus seed-controlled
// noise, documented in docs/case_format.md. All generators are deterministic
// for a given seed.

// 6-bus feeder, 3 ECs, one of them with zero-capacity DERs (a null player).
NetworkCase make_toy6(unsigned seed = 7, int horizon = 6);

// Mirrored feeder: two electrically identical branches hosting identical ECs.
NetworkCase make_twin6(unsigned seed = 7, int horizon = 6);

// 19-bus radial feeder with CIGRE-style laterals; ECs at buses 9, 11 and 18.
NetworkCase make_cigre19(unsigned seed = 7, int horizon = 24);

// 69-bus feeder hosting six ECs in three exactly mirrored pairs; the remote
// pair carries near-zero DER capacity.
NetworkCase make_case69_pairs(unsigned seed = 7, int horizon = 8);

struct NamedCase {
  std::string name;
  NetworkCase net;
};
std::vector<NamedCase> bundled_cases();

// Generator entry point used by the CLI.
NetworkCase make_case(const std::string& topology, unsigned seed, int horizon);

}  // namespace gridshare

#endif
