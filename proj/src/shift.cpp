#include "tdlc/shift.hpp"

#include <algorithm>

#include "tdlc/errors.hpp"
#include "tdlc/rational.hpp"

namespace tdlc {

std::string mode_name(ShiftMode mode) {
  switch (mode) {
    case ShiftMode::FullCompact: return "FULL_COMPACT";
    case ShiftMode::RightOpen: return "RIGHT_OPEN";
    case ShiftMode::HeightOpen: return "HEIGHT_OPEN";
  }
  throw error("mode_name: bad mode");
}

ShiftMode mode_from_name(const std::string& name) {
  if (name == "FULL_COMPACT") return ShiftMode::FullCompact;
  if (name == "RIGHT_OPEN") return ShiftMode::RightOpen;
  if (name == "HEIGHT_OPEN") return ShiftMode::HeightOpen;
  throw input_error("unknown shift mode \"" + name + "\"");
}

ShiftSystem::ShiftSystem(long p_, int height_, ShiftMode mode_)
    : p(p_), height(height_), mode(mode_) {
  require_prime(p);
  if (height < 1) throw input_error("shift system: height K must be >= 1");
  if (mode == ShiftMode::HeightOpen && height < 2)
    throw input_error("shift system: HEIGHT_OPEN needs K >= 2");
}

int ShiftSystem::noise_left() const {
  switch (mode) {
    case ShiftMode::FullCompact: return 0;
    case ShiftMode::RightOpen: return height;  // basic nbhds freeze the left
    case ShiftMode::HeightOpen: return height - 1;
  }
  throw error("noise_left: bad mode");
}

int ShiftSystem::noise_right() const {
  switch (mode) {
    case ShiftMode::FullCompact: return 0;
    case ShiftMode::RightOpen: return 0;
    case ShiftMode::HeightOpen: return height - 1;
  }
  throw error("noise_right: bad mode");
}

Cylinder::Cylinder(int height, long lo, int left, std::vector<int> window,
                   int right)
    : height_(height), lo_(lo), left_(left), window_(std::move(window)),
      right_(right) {
  if (height_ < 1) throw input_error("cylinder: height must be >= 1");
  auto check = [&](int e) {
    if (e < 0 || e > height_)
      throw input_error("cylinder: exponent out of range [0, K]");
  };
  check(left_);
  check(right_);
  for (int e : window_) check(e);
  normalize();
}

void Cylinder::normalize() {
  std::size_t drop_front = 0;
  while (drop_front < window_.size() && window_[drop_front] == left_)
    ++drop_front;
  if (drop_front) {
    window_.erase(window_.begin(),
                  window_.begin() + static_cast<long>(drop_front));
    lo_ += static_cast<long>(drop_front);
  }
  while (!window_.empty() && window_.back() == right_) window_.pop_back();
  if (window_.empty() && left_ == right_) lo_ = 0;  // constant cylinder
}

Cylinder Cylinder::constant(int height, int exponent) {
  return Cylinder(height, 0, exponent, {}, exponent);
}

Cylinder Cylinder::make(int height, long lo, int left, std::vector<int> window,
                        int right) {
  return Cylinder(height, lo, left, std::move(window), right);
}

int Cylinder::at(long i) const {
  if (i < lo_) return left_;
  long off = i - lo_;
  if (off < static_cast<long>(window_.size()))
    return window_[static_cast<std::size_t>(off)];
  return right_;
}

int Cylinder::max_exponent() const {
  int m = std::max(left_, right_);
  for (int e : window_) m = std::max(m, e);
  return m;
}

namespace {

void require_same_height(const Cylinder& a, const Cylinder& b) {
  if (a.height() != b.height())
    throw input_error("cylinder operation: height mismatch");
}

// Pointwise combination of two cylinders; f acts on exponents.
template <typename F>
Cylinder pointwise(const Cylinder& a, const Cylinder& b, F f) {
  require_same_height(a, b);
  long lo = std::min(a.lo(), b.lo());
  long hi = std::max(a.hi(), b.hi());
  std::vector<int> window;
  window.reserve(static_cast<std::size_t>(std::max<long>(hi - lo + 1, 0)));
  for (long i = lo; i <= hi; ++i) window.push_back(f(a.at(i), b.at(i)));
  return Cylinder::make(a.height(), lo, f(a.left(), b.left()),
                        std::move(window), f(a.right(), b.right()));
}

}  // namespace

Cylinder shift_image(const Cylinder& v, long k) {
  return Cylinder::make(v.height(), v.lo() - k, v.left(),
                        std::vector<int>(v.window()), v.right());
}

Cylinder meet(const Cylinder& a, const Cylinder& b) {
  return pointwise(a, b, [](int x, int y) { return std::max(x, y); });
}

Cylinder join(const Cylinder& a, const Cylinder& b) {
  return pointwise(a, b, [](int x, int y) { return std::min(x, y); });
}

bool cyl_contains(const Cylinder& v, const Cylinder& w) {
  require_same_height(v, w);
  if (w.left() < v.left() || w.right() < v.right()) return false;
  long lo = std::min(v.lo(), w.lo());
  long hi = std::max(v.hi(), w.hi());
  for (long i = lo; i <= hi; ++i)
    if (w.at(i) < v.at(i)) return false;
  return true;
}

PExp index_exponent(const Cylinder& sub, const Cylinder& sup) {
  require_same_height(sub, sup);
  if (!cyl_contains(sup, sub))
    throw containment_error("cylinder index: subgroups are not nested");
  if (sub.left() != sup.left() || sub.right() != sup.right())
    throw infinite_index_error(
        "cylinder index: exponents differ on a tail, the index is infinite");
  long lo = std::min(sub.lo(), sup.lo());
  long hi = std::max(sub.hi(), sup.hi());
  long long e = 0;
  for (long i = lo; i <= hi; ++i) e += sub.at(i) - sup.at(i);
  return PExp(e);
}

Cylinder forward_part(const Cylinder& v) {
  // exponent at i = max of v over [i, +inf)
  int tail = v.right();
  std::vector<int> window(v.window().size());
  int acc = tail;
  for (std::size_t j = v.window().size(); j-- > 0;) {
    acc = std::max(acc, v.window()[j]);
    window[j] = acc;
  }
  int left = std::max(v.left(), acc);
  return Cylinder::make(v.height(), v.lo(), left, std::move(window), tail);
}

Cylinder backward_part(const Cylinder& v) {
  // exponent at i = max of v over (-inf, i]
  int head = v.left();
  std::vector<int> window(v.window().size());
  int acc = head;
  for (std::size_t j = 0; j < v.window().size(); ++j) {
    acc = std::max(acc, v.window()[j]);
    window[j] = acc;
  }
  int right = std::max(v.right(), acc);
  return Cylinder::make(v.height(), v.lo(), head, std::move(window), right);
}

namespace {

// Closedness of an increasing union of shifts of a monotone cylinder: the
// union equals its coordinatewise limit iff the profile stabilizes after
// finitely many coordinates, or the unstabilized side can be absorbed by the
// neighborhood tails of the topology (noise floor at least as deep as the
// profile's limiting exponent on that side).
bool union_closed(int stable_exp, int spreading_side_exp, int noise_floor) {
  return spreading_side_exp == stable_exp || noise_floor >= spreading_side_exp;
}

}  // namespace

UnionLimit forward_union(const ShiftSystem& sys, const Cylinder& v) {
  Cylinder plus = forward_part(v);
  // The chain sigma^n(plus) grows leftward; its limit is the constant
  // cylinder at the right-tail exponent of plus.
  Cylinder limit = Cylinder::constant(v.height(), plus.right());
  bool closed = union_closed(plus.right(), plus.left(), sys.noise_left());
  return {limit, closed};
}

UnionLimit backward_union(const ShiftSystem& sys, const Cylinder& v) {
  Cylinder minus = backward_part(v);
  Cylinder limit = Cylinder::constant(v.height(), minus.left());
  bool closed = union_closed(minus.left(), minus.right(), sys.noise_right());
  return {limit, closed};
}

TidyVerdict tidy_check(const ShiftSystem& sys, const Cylinder& v) {
  TidyVerdict verdict;
  Cylinder plus = forward_part(v);
  Cylinder minus = backward_part(v);
  // v = v_+ v_- means the exponent of v is the min of the two parts
  // everywhere; only the window can fail.
  verdict.tidy_above = v == join(plus, minus);
  verdict.forward_union_closed = forward_union(sys, v).closed;
  verdict.backward_union_closed = backward_union(sys, v).closed;
  verdict.tidy_below = verdict.forward_union_closed;
  return verdict;
}

PExp local_scale_exponent(const Cylinder& v) {
  Cylinder img = shift_image(v, 1);
  return index_exponent(meet(v, img), img);
}

PExp local_entropy_exponent(const Cylinder& v) {
  Cylinder plus = forward_part(v);
  return index_exponent(plus, shift_image(plus, 1));
}

bool is_compact(const ShiftSystem& sys, const Cylinder& v) {
  switch (sys.mode) {
    case ShiftMode::FullCompact:
      return true;  // closed subgroups of a compact group
    case ShiftMode::RightOpen:
      return v.left() == sys.height;  // trivial left tail
    case ShiftMode::HeightOpen:
      return v.left() >= sys.height - 1 && v.right() >= sys.height - 1;
  }
  throw error("is_compact: bad mode");
}

bool is_open(const ShiftSystem& sys, const Cylinder& v) {
  switch (sys.mode) {
    case ShiftMode::FullCompact:
      return v.left() == 0 && v.right() == 0;  // cofinitely full
    case ShiftMode::RightOpen:
      return v.right() == 0;
    case ShiftMode::HeightOpen:
      return v.left() <= sys.height - 1 && v.right() <= sys.height - 1;
  }
  throw error("is_open: bad mode");
}

bool is_admissible(const ShiftSystem& sys, const Cylinder& v) {
  return v.height() == sys.height && is_compact(sys, v) && is_open(sys, v);
}

void require_admissible(const ShiftSystem& sys, const Cylinder& v) {
  if (v.height() != sys.height)
    throw input_error("cylinder height does not match the system");
  if (!is_compact(sys, v))
    throw input_error("cylinder is not compact in mode " + mode_name(sys.mode));
  if (!is_open(sys, v))
    throw input_error("cylinder is not open in mode " + mode_name(sys.mode));
}

Cylinder designated_open(const ShiftSystem& sys) {
  switch (sys.mode) {
    case ShiftMode::FullCompact:
      return Cylinder::constant(sys.height, 0);  // the whole group
    case ShiftMode::RightOpen:
      // sequences supported on the right half-line
      return Cylinder::make(sys.height, 0, sys.height, {}, 0);
    case ShiftMode::HeightOpen:
      return Cylinder::constant(sys.height, sys.height - 1);
  }
  throw error("designated_open: bad mode");
}

Cylinder nub(const ShiftSystem& sys) {
  switch (sys.mode) {
    case ShiftMode::FullCompact:
      return Cylinder::constant(sys.height, 0);
    case ShiftMode::RightOpen:
      return Cylinder::constant(sys.height, sys.height);  // trivial
    case ShiftMode::HeightOpen:
      return Cylinder::constant(sys.height, sys.height - 1);
  }
  throw error("nub: bad mode");
}

std::vector<Cylinder> local_base(const ShiftSystem& sys, int depth) {
  std::vector<Cylinder> base;
  base.reserve(static_cast<std::size_t>(depth) + 1);
  for (int n = 0; n <= depth; ++n) {
    switch (sys.mode) {
      case ShiftMode::FullCompact:
        // trivial on [-n, n], full outside
        base.push_back(Cylinder::make(
            sys.height, -n, 0,
            std::vector<int>(static_cast<std::size_t>(2 * n + 1), sys.height),
            0));
        break;
      case ShiftMode::RightOpen:
        // supported on [n, +inf)
        base.push_back(Cylinder::make(sys.height, n, sys.height, {}, 0));
        break;
      case ShiftMode::HeightOpen:
        // trivial on [-n, n], the open level outside
        base.push_back(Cylinder::make(
            sys.height, -n, sys.height - 1,
            std::vector<int>(static_cast<std::size_t>(2 * n + 1), sys.height),
            sys.height - 1));
        break;
    }
  }
  return base;
}

namespace {

std::vector<Cylinder> candidate_family(const ShiftSystem& sys,
                                       const std::vector<Cylinder>& extra) {
  std::vector<Cylinder> family = local_base(sys, 8);
  for (int e = 0; e <= sys.height; ++e) {
    Cylinder c = Cylinder::constant(sys.height, e);
    if (is_admissible(sys, c)) family.push_back(c);
  }
  for (const Cylinder& v : extra) {
    require_admissible(sys, v);
    family.push_back(v);
  }
  return family;
}

}  // namespace

ShiftScaleResult scale_exponent(const ShiftSystem& sys,
                                const std::vector<Cylinder>& extra) {
  std::vector<Cylinder> family = candidate_family(sys, extra);
  ShiftScaleResult best{PExp::infinity(), family.front(), {}};
  for (const Cylinder& v : family) {
    PExp e = local_scale_exponent(v);
    TidyVerdict verdict = tidy_check(sys, v);
    bool tidy = verdict.tidy_above && verdict.tidy_below;
    bool better = e < best.exponent ||
                  (e == best.exponent &&
                   tidy && !(best.witness_verdict.tidy_above &&
                             best.witness_verdict.tidy_below));
    if (better) best = {e, v, verdict};
  }
  if (!(best.witness_verdict.tidy_above && best.witness_verdict.tidy_below))
    throw verification_error(
        "shift scale: minimum attained only at non-tidy members of the "
        "generated family");
  return best;
}

PExp h_top_exponent(const ShiftSystem& sys, const std::vector<Cylinder>& extra) {
  std::vector<Cylinder> family = candidate_family(sys, extra);
  PExp sup(0);
  for (const Cylinder& v : family) {
    PExp e = local_entropy_exponent(v);
    if (e > sup) sup = e;
  }
  return sup;
}

}  // namespace tdlc
