#pragma once

#include <string>
#include <vector>

#include "tdlc/pexp.hpp"

namespace tdlc {

// The three topologies carried by the two-sided shift on F^Z, F = Z(p^K):
//
//   FullCompact - the compact product topology; the whole group is the
//                 designated compact open subgroup.
//   RightOpen   - the topology in which the subgroup of sequences supported
//                 on the right half-line (with its product topology) is
//                 declared compact open.  Compact subgroups must then have a
//                 trivial left tail.
//   HeightOpen  - K >= 2; the constant product of the order-p subgroup
//                 p^{K-1} F is declared compact open.  Finite-height stand-in
//                 for the quasicyclic-fiber shift: every subgroup datum that
//                 shows up in the worked gallery lives at height <= 2, so the
//                 truncation changes no computed index.
enum class ShiftMode { FullCompact, RightOpen, HeightOpen };

std::string mode_name(ShiftMode mode);
ShiftMode mode_from_name(const std::string& name);

struct ShiftSystem {
  long p;
  int height;  // K: the base group per coordinate is Z(p^K)
  ShiftMode mode;

  ShiftSystem(long p, int height, ShiftMode mode);

  // Exponent floor of basic-neighborhood tails on each side: a sequence can
  // be approximated while differing arbitrarily far out on a side only
  // inside p^{noise} F there.  Drives the closedness verdicts for the
  // increasing unions.
  int noise_left() const;
  int noise_right() const;
};

// Coordinatewise subgroup of F^Z: coordinate i contributes p^{e(i)} F where
// e is constant to the left of a finite window, arbitrary on the window, and
// constant to the right.  Since the subgroups of a cyclic p-group form a
// chain, intersection and sum are the coordinatewise max and min of e, and
// every index is a finite sum of exponent differences.
class Cylinder {
 public:
  // Constant exponent everywhere.
  static Cylinder constant(int height, int exponent);
  // e(i) = left for i < lo, window[i - lo] on the window, right for
  // i >= lo + window.size().
  static Cylinder make(int height, long lo, int left, std::vector<int> window,
                       int right);

  int height() const { return height_; }
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(window_.size()) - 1; }
  int left() const { return left_; }
  int right() const { return right_; }
  const std::vector<int>& window() const { return window_; }

  int at(long i) const;
  int max_exponent() const;  // over all coordinates
  bool is_constant() const { return window_.empty() && left_ == right_; }

  friend bool operator==(const Cylinder&, const Cylinder&) = default;

 private:
  Cylinder(int height, long lo, int left, std::vector<int> window, int right);
  void normalize();

  int height_;
  long lo_;
  int left_;
  std::vector<int> window_;
  int right_;
};

// sigma^k: the exponent at i becomes the input's exponent at i + k.
Cylinder shift_image(const Cylinder& v, long k);

Cylinder meet(const Cylinder& a, const Cylinder& b);  // intersection
Cylinder join(const Cylinder& a, const Cylinder& b);  // sum

// w subset of v, coordinatewise.
bool cyl_contains(const Cylinder& v, const Cylinder& w);

// Exponent of [sup : sub]; throws containment_error when not nested and
// infinite_index_error when the exponents differ at infinitely many
// coordinates (non-commensurable subgroups).
PExp index_exponent(const Cylinder& sub, const Cylinder& sup);

// Intersection of all forward (resp. backward) shift images; closed form:
// running max of exponents toward +inf (resp. -inf).
Cylinder forward_part(const Cylinder& v);
Cylinder backward_part(const Cylinder& v);

// Increasing union of the shifted forward (resp. backward) part, as its
// coordinatewise limit plus the verdict whether the union is closed, i.e.
// actually equals that limit group.
struct UnionLimit {
  Cylinder limit;
  bool closed;
};

UnionLimit forward_union(const ShiftSystem& sys, const Cylinder& v);
UnionLimit backward_union(const ShiftSystem& sys, const Cylinder& v);

struct TidyVerdict {
  bool tidy_above = false;  // v equals the product of its two parts
  bool tidy_below = false;  // the forward union is closed
  bool forward_union_closed = false;
  bool backward_union_closed = false;  // diagnostic, not part of tidy_below
};

TidyVerdict tidy_check(const ShiftSystem& sys, const Cylinder& v);

// s(sigma, V) and H_top(sigma, V) as exponents; closed-form finite sums.
PExp local_scale_exponent(const Cylinder& v);
PExp local_entropy_exponent(const Cylinder& v);

bool is_compact(const ShiftSystem& sys, const Cylinder& v);
bool is_open(const ShiftSystem& sys, const Cylinder& v);
bool is_admissible(const ShiftSystem& sys, const Cylinder& v);
void require_admissible(const ShiftSystem& sys, const Cylinder& v);

// The designated compact open subgroup of the mode.
Cylinder designated_open(const ShiftSystem& sys);

// Largest shift-stable compact subgroup with no proper stable relatively
// open subgroup: the constant product of the largest coordinate subgroup
// whose constant cylinder is compact in the mode.
Cylinder nub(const ShiftSystem& sys);

// Descending local base at the identity (depth + 1 members).
std::vector<Cylinder> local_base(const ShiftSystem& sys, int depth);

struct ShiftScaleResult {
  PExp exponent;
  Cylinder witness;
  TidyVerdict witness_verdict;
};

// Minimum of s(sigma, -) over the generated local base, the admissible
// constant cylinders and any extra cylinders; the witness is certified tidy.
ShiftScaleResult scale_exponent(const ShiftSystem& sys,
                                const std::vector<Cylinder>& extra = {});

// Supremum of H_top(sigma, -) over the generated local base plus extras.
PExp h_top_exponent(const ShiftSystem& sys,
                    const std::vector<Cylinder>& extra = {});

}  // namespace tdlc
