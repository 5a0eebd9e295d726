#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "../common.hpp"

namespace kandae::ad {

class Record;

// A value in a recorded scalar computation. Carries the primal, the derivative
// of the primal with respect to the seeded time input (tangent), and a handle
// into the record for the reverse pass. Constants have no handle.
class Scalar {
public:
  Scalar() : Scalar(0.0) {}
  Scalar(double v) : rec_(nullptr), id_(-1), p_(v), d_(0.0) {}

  double value() const { return p_; }
  double tangent() const { return d_; }
  bool is_constant() const { return rec_ == nullptr; }
  Record* record() const { return rec_; }
  std::int32_t id() const { return id_; }

private:
  friend class Record;
  friend Scalar operator+(const Scalar&, const Scalar&);
  friend Scalar operator-(const Scalar&, const Scalar&);
  friend Scalar operator*(const Scalar&, const Scalar&);
  friend Scalar operator/(const Scalar&, const Scalar&);
  friend Scalar operator-(const Scalar&);
  friend Scalar operator+(const Scalar&, double);
  friend Scalar operator-(const Scalar&, double);
  friend Scalar operator-(double, const Scalar&);
  friend Scalar operator*(const Scalar&, double);
  friend Scalar operator/(const Scalar&, double);
  friend Scalar operator/(double, const Scalar&);
  friend Scalar sin(const Scalar&);
  friend Scalar cos(const Scalar&);
  friend Scalar exp(const Scalar&);
  friend Scalar tanh(const Scalar&);
  friend Scalar logistic(const Scalar&);
  friend Scalar powi(const Scalar&, int);

  Scalar(Record* rec, std::int32_t id, double p, double d)
      : rec_(rec), id_(id), p_(p), d_(d) {}

  Record* rec_;
  std::int32_t id_;
  double p_;
  double d_;
};

// Append-only tape. Every node stores its primal and its time-tangent; the
// reverse pass differentiates the joint (primal, tangent) computation, so one
// backward sweep yields exact gradients of expressions that contain extracted
// time-derivatives. Two adjoint channels per node: abar = d out / d primal,
// bbar = d out / d tangent, propagated by
//   abar_a += abar_c * f_a + bbar_c * (f_aa * d_a + f_ab * d_b)
//   bbar_a += bbar_c * f_a
class Record {
public:
  struct Mark {
    std::size_t nodes = 0;
    std::size_t arena = 0;
  };

  Record() = default;
  Record(const Record&) = delete;
  Record& operator=(const Record&) = delete;

  void reserve(std::size_t nodes, std::size_t arena = 0);

  Scalar parameter(double value);
  Scalar input(double value);

  std::size_t size() const { return op_.size(); }
  std::size_t param_count() const { return params_.size(); }

  Mark mark() const { return {op_.size(), arena_.size()}; }
  void reset_to(const Mark& m);

  // Full reverse pass from `out`; returns d out / d theta_i for every
  // registered parameter, in registration order.
  std::vector<double> gradient(const Scalar& out);

  // Accumulating variant used by the loss: parameters must form a tape prefix
  // ending at or before `from`. begin_accumulation() zeroes the adjoint
  // buffers; each backward_suffix() seeds `out`, sweeps only [from, size) and
  // adds into the parameter adjoints.
  void begin_accumulation();
  void backward_suffix(const Scalar& out, double seed, const Mark& from);
  void collect_param_adjoints(std::span<double> grad_out) const;

  // Recomputes every primal/tangent from the stored operations in order.
  void replay();

  double primal_at(std::int32_t id) const { return primal_[static_cast<std::size_t>(id)]; }
  double tangent_at(std::int32_t id) const { return tangent_[static_cast<std::size_t>(id)]; }

  Scalar tangent_of(const Scalar& x);
  Scalar sum(std::span<const Scalar> xs);
  Scalar dot(std::span<const Scalar> xs, std::span<const Scalar> ys);
  Scalar bias_dot(const Scalar& bias, std::span<const Scalar> xs, std::span<const Scalar> ys);

private:
  friend Scalar operator+(const Scalar&, const Scalar&);
  friend Scalar operator-(const Scalar&, const Scalar&);
  friend Scalar operator*(const Scalar&, const Scalar&);
  friend Scalar operator/(const Scalar&, const Scalar&);
  friend Scalar operator-(const Scalar&);
  friend Scalar operator+(const Scalar&, double);
  friend Scalar operator-(const Scalar&, double);
  friend Scalar operator-(double, const Scalar&);
  friend Scalar operator*(const Scalar&, double);
  friend Scalar operator/(const Scalar&, double);
  friend Scalar operator/(double, const Scalar&);
  friend Scalar sin(const Scalar&);
  friend Scalar cos(const Scalar&);
  friend Scalar exp(const Scalar&);
  friend Scalar tanh(const Scalar&);
  friend Scalar logistic(const Scalar&);
  friend Scalar powi(const Scalar&, int);

  enum Op : std::uint8_t {
    kParam, kInput, kConst, kAdd, kSub, kMul, kDiv, kNeg, kAddC, kMulC,
    kCDiv, kPowInt, kSin, kCos, kExp, kTanh, kLogistic, kTangentOf, kSum,
    kDot, kBiasDot
  };

  std::int32_t push(Op op, std::int32_t a, std::int32_t b, double aux,
                    double primal, double tangent, bool tvalid);
  Scalar wrap(std::int32_t id) const {
    return Scalar(const_cast<Record*>(this), id,
                  primal_[static_cast<std::size_t>(id)],
                  tangent_[static_cast<std::size_t>(id)]);
  }
  std::int32_t materialize(const Scalar& s);  // gives constants a node id via AddC(0)
  void reverse_sweep(std::size_t lo, std::size_t hi);
  void ensure_adjoints();

  static Scalar binary(const Scalar& a, const Scalar& b, Op op);
  static Scalar unary(const Scalar& a, Op op);
  static Record* common_record(const Scalar& a, const Scalar& b);

  std::vector<std::uint8_t> op_;
  std::vector<std::int32_t> pa_;
  std::vector<std::int32_t> pb_;
  std::vector<double> aux_;
  std::vector<double> primal_;
  std::vector<double> tangent_;
  std::vector<std::uint8_t> tvalid_;
  std::vector<std::int32_t> arena_;
  std::vector<std::int32_t> params_;
  std::vector<double> abar_;
  std::vector<double> bbar_;
  std::int32_t input_id_ = -1;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);
Scalar operator+(const Scalar& a, double k);
Scalar operator-(const Scalar& a, double k);
Scalar operator-(double k, const Scalar& a);
Scalar operator*(const Scalar& a, double k);
Scalar operator/(const Scalar& a, double k);
Scalar operator/(double k, const Scalar& a);
inline Scalar operator+(double k, const Scalar& a) { return a + k; }
inline Scalar operator*(double k, const Scalar& a) { return a * k; }

Scalar sin(const Scalar& a);
Scalar cos(const Scalar& a);
Scalar exp(const Scalar& a);
Scalar tanh(const Scalar& a);
Scalar logistic(const Scalar& a);
Scalar powi(const Scalar& a, int n);
inline Scalar sq(const Scalar& a) { return powi(a, 2); }

// d/dt of x as a new value; x must carry a genuine time-tangent.
Scalar tangent_of(const Scalar& x);

// double fallbacks so templated model code works for plain values too
inline double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }
inline double powi(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}
inline double sq(double x) { return x * x; }

}  // namespace kandae::ad
