#pragma once

#include <string>
#include <vector>

#include "hc/graphs.hpp"
#include "hc/rays.hpp"

namespace hc {

struct CutCrossing {
  int cut_id = 0;
  int count = 0;
  bool tails_split = true;  // per-object: ends up on both sides
};

// Desk-scale verdict. `consistent` never claims anything about the infinite
// graph; refutations carry a concrete witness.
struct VerificationReport {
  std::string object_kind;
  int radius = 0;
  int margin = 0;
  bool coverage_exact = false;
  std::string coverage_witness;
  bool injective = false;
  std::string collision_witness;
  bool degrees_ok = false;
  std::string degree_witness;
  std::vector<CutCrossing> crossings;
  bool tails_ok = false;
  std::string tail_witness;
  bool consistent = false;
  std::string reason;

  std::string to_text() const;
};

// margin = max(period length, locality bound); interior = dist <= r - margin
VerificationReport verify_double_ray(const GraphWindow& w, const DoubleRay& r, int locality = 0);

VerificationReport verify_circle(const GraphWindow& w, const CircleDescription& c,
                                 const std::vector<EdgeCut>& cuts, int locality = 0);

VerificationReport verify_cover(const GraphWindow& w, const HamiltonCover& h, int locality = 0);

struct RapaportReport {
  bool pass = false;
  std::string reason;
  std::vector<std::string> witnesses;
};

struct BasedCycle {
  Element base;
  GenWord word;
};

RapaportReport check_rapaport_hypotheses(const GraphWindow& w, const std::vector<BasedCycle>& R,
                                         const std::vector<BasedCycle>& S4);

// Unrolls far enough that both tails left the window; throws UnrollTooShort
// if a side cannot escape (finite-order period product).
std::vector<Element> unroll_past_window(const GraphWindow& w, const DoubleRay& r,
                                        std::string* error = nullptr);

}  // namespace hc
