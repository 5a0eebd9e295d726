#include "record.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kandae::ad {

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

void Record::reserve(std::size_t nodes, std::size_t arena) {
  op_.reserve(nodes);
  pa_.reserve(nodes);
  pb_.reserve(nodes);
  aux_.reserve(nodes);
  primal_.reserve(nodes);
  tangent_.reserve(nodes);
  tvalid_.reserve(nodes);
  if (arena) arena_.reserve(arena);
}

std::int32_t Record::push(Op op, std::int32_t a, std::int32_t b, double aux,
                          double primal, double tangent, bool tvalid) {
  const std::int32_t id = static_cast<std::int32_t>(op_.size());
  if (!std::isfinite(primal) || !std::isfinite(tangent))
    fail("non-finite value at record node " + std::to_string(id));
  op_.push_back(op);
  pa_.push_back(a);
  pb_.push_back(b);
  aux_.push_back(aux);
  primal_.push_back(primal);
  tangent_.push_back(tangent);
  tvalid_.push_back(tvalid ? 1 : 0);
  return id;
}

Scalar Record::parameter(double value) {
  const std::int32_t id = push(kParam, -1, -1, 0.0, value, 0.0, true);
  params_.push_back(id);
  return wrap(id);
}

Scalar Record::input(double value) {
  if (input_id_ >= 0) fail("record already has a seeded input");
  input_id_ = push(kInput, -1, -1, 0.0, value, 1.0, true);
  return wrap(input_id_);
}

void Record::reset_to(const Mark& m) {
  require(m.nodes <= op_.size() && m.arena <= arena_.size(),
          "reset_to past end of record");
  op_.resize(m.nodes);
  pa_.resize(m.nodes);
  pb_.resize(m.nodes);
  aux_.resize(m.nodes);
  primal_.resize(m.nodes);
  tangent_.resize(m.nodes);
  tvalid_.resize(m.nodes);
  arena_.resize(m.arena);
  if (abar_.size() > m.nodes) abar_.resize(m.nodes);
  if (bbar_.size() > m.nodes) bbar_.resize(m.nodes);
  while (!params_.empty() &&
         params_.back() >= static_cast<std::int32_t>(m.nodes))
    params_.pop_back();
  if (input_id_ >= static_cast<std::int32_t>(m.nodes)) input_id_ = -1;
}

Record* Record::common_record(const Scalar& a, const Scalar& b) {
  if (a.rec_ && b.rec_ && a.rec_ != b.rec_)
    fail("ADScalar operands belong to different records");
  return a.rec_ ? a.rec_ : b.rec_;
}

std::int32_t Record::materialize(const Scalar& s) {
  if (!s.is_constant()) return s.id_;
  return push(kConst, -1, -1, 0.0, s.p_, 0.0, true);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Record* r = Record::common_record(a, b);
  if (!r) return Scalar(a.p_ + b.p_);
  if (a.is_constant()) return b + a.p_;
  if (b.is_constant()) return a + b.p_;
  const std::int32_t id = r->push(Record::kAdd, a.id_, b.id_, 0.0,
                                  a.p_ + b.p_, a.d_ + b.d_,
                                  r->tvalid_[a.id_] && r->tvalid_[b.id_]);
  return r->wrap(id);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Record* r = Record::common_record(a, b);
  if (!r) return Scalar(a.p_ - b.p_);
  if (b.is_constant()) return a + (-b.p_);
  if (a.is_constant()) return a.p_ - b;
  const std::int32_t id = r->push(Record::kSub, a.id_, b.id_, 0.0,
                                  a.p_ - b.p_, a.d_ - b.d_,
                                  r->tvalid_[a.id_] && r->tvalid_[b.id_]);
  return r->wrap(id);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Record* r = Record::common_record(a, b);
  if (!r) return Scalar(a.p_ * b.p_);
  if (a.is_constant()) return b * a.p_;
  if (b.is_constant()) return a * b.p_;
  const std::int32_t id = r->push(Record::kMul, a.id_, b.id_, 0.0,
                                  a.p_ * b.p_, a.d_ * b.p_ + a.p_ * b.d_,
                                  r->tvalid_[a.id_] && r->tvalid_[b.id_]);
  return r->wrap(id);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  Record* r = Record::common_record(a, b);
  if (!r) {
    if (b.p_ == 0.0) fail("division by zero constant");
    return Scalar(a.p_ / b.p_);
  }
  if (b.is_constant()) return a / b.p_;
  if (a.is_constant()) return a.p_ / b;
  if (b.p_ == 0.0)
    fail("division by zero at record node " + std::to_string(b.id_));
  const double p = a.p_ / b.p_;
  const std::int32_t id = r->push(Record::kDiv, a.id_, b.id_, 0.0, p,
                                  (a.d_ - p * b.d_) / b.p_,
                                  r->tvalid_[a.id_] && r->tvalid_[b.id_]);
  return r->wrap(id);
}

Scalar operator-(const Scalar& a) {
  if (a.is_constant()) return Scalar(-a.p_);
  Record* r = a.rec_;
  const std::int32_t id =
      r->push(Record::kNeg, a.id_, -1, 0.0, -a.p_, -a.d_, r->tvalid_[a.id_]);
  return r->wrap(id);
}

Scalar operator+(const Scalar& a, double k) {
  if (a.is_constant()) return Scalar(a.p_ + k);
  Record* r = a.rec_;
  const std::int32_t id =
      r->push(Record::kAddC, a.id_, -1, k, a.p_ + k, a.d_, r->tvalid_[a.id_]);
  return r->wrap(id);
}

Scalar operator-(const Scalar& a, double k) { return a + (-k); }

Scalar operator-(double k, const Scalar& a) { return (-a) + k; }

Scalar operator*(const Scalar& a, double k) {
  if (a.is_constant()) return Scalar(a.p_ * k);
  Record* r = a.rec_;
  const std::int32_t id = r->push(Record::kMulC, a.id_, -1, k, a.p_ * k,
                                  a.d_ * k, r->tvalid_[a.id_]);
  return r->wrap(id);
}

Scalar operator/(const Scalar& a, double k) {
  if (k == 0.0) fail("division by zero constant");
  return a * (1.0 / k);
}

Scalar operator/(double k, const Scalar& a) {
  if (a.is_constant()) {
    if (a.p_ == 0.0) fail("division by zero constant");
    return Scalar(k / a.p_);
  }
  if (a.p_ == 0.0)
    fail("division by zero at record node " + std::to_string(a.id_));
  Record* r = a.rec_;
  const double p = k / a.p_;
  const std::int32_t id = r->push(Record::kCDiv, a.id_, -1, k, p,
                                  -p / a.p_ * a.d_, r->tvalid_[a.id_]);
  return r->wrap(id);
}

Scalar sin(const Scalar& a) {
  if (a.is_constant()) return Scalar(std::sin(a.p_));
  Record* r = a.rec_;
  const double fa = std::cos(a.p_);
  const std::int32_t id = r->push(Record::kSin, a.id_, -1, fa, std::sin(a.p_),
                                  fa * a.d_, r->tvalid_[a.id_]);
  return r->wrap(id);
}

Scalar cos(const Scalar& a) {
  if (a.is_constant()) return Scalar(std::cos(a.p_));
  Record* r = a.rec_;
  const double fa = -std::sin(a.p_);
  const std::int32_t id = r->push(Record::kCos, a.id_, -1, fa, std::cos(a.p_),
                                  fa * a.d_, r->tvalid_[a.id_]);
  return r->wrap(id);
}

Scalar exp(const Scalar& a) {
  if (a.is_constant()) return Scalar(std::exp(a.p_));
  Record* r = a.rec_;
  const double p = std::exp(a.p_);
  const std::int32_t id =
      r->push(Record::kExp, a.id_, -1, 0.0, p, p * a.d_, r->tvalid_[a.id_]);
  return r->wrap(id);
}

Scalar tanh(const Scalar& a) {
  if (a.is_constant()) return Scalar(std::tanh(a.p_));
  Record* r = a.rec_;
  const double p = std::tanh(a.p_);
  const std::int32_t id = r->push(Record::kTanh, a.id_, -1, 0.0, p,
                                  (1.0 - p * p) * a.d_, r->tvalid_[a.id_]);
  return r->wrap(id);
}

Scalar logistic(const Scalar& a) {
  if (a.is_constant()) return Scalar(1.0 / (1.0 + std::exp(-a.p_)));
  Record* r = a.rec_;
  const double p = 1.0 / (1.0 + std::exp(-a.p_));
  const std::int32_t id = r->push(Record::kLogistic, a.id_, -1, 0.0, p,
                                  p * (1.0 - p) * a.d_, r->tvalid_[a.id_]);
  return r->wrap(id);
}

Scalar powi(const Scalar& a, int n) {
  if (n < 0) fail("powi requires a nonnegative exponent");
  if (n == 0) return Scalar(1.0);
  if (n == 1) return a;
  if (a.is_constant()) return Scalar(ipow(a.p_, n));
  Record* r = a.rec_;
  const double p = ipow(a.p_, n);
  const double fa = n * ipow(a.p_, n - 1);
  const std::int32_t id =
      r->push(Record::kPowInt, a.id_, -1, static_cast<double>(n), p,
              fa * a.d_, r->tvalid_[a.id_]);
  return r->wrap(id);
}

Scalar Record::tangent_of(const Scalar& x) {
  if (x.is_constant()) return Scalar(0.0);
  require(x.rec_ == this, "tangent_of: value from another record");
  if (!tvalid_[x.id_])
    fail("tangent_of applied to a value whose tangent is not a time-derivative");
  const std::int32_t id =
      push(kTangentOf, x.id_, -1, 0.0, x.d_, 0.0, false);
  return wrap(id);
}

Scalar tangent_of(const Scalar& x) {
  if (x.is_constant()) return Scalar(0.0);
  return x.record()->tangent_of(x);
}

Scalar Record::sum(std::span<const Scalar> xs) {
  if (xs.empty()) return Scalar(0.0);
  double p = 0.0, d = 0.0;
  bool tv = true;
  const std::size_t off = arena_.size();
  for (const Scalar& x : xs) {
    require(x.is_constant() || x.rec_ == this, "sum: value from another record");
    const std::int32_t id = materialize(x);
    arena_.push_back(id);
    p += primal_[id];
    d += tangent_[id];
    tv = tv && tvalid_[id];
  }
  const std::int32_t id = push(kSum, static_cast<std::int32_t>(off),
                               static_cast<std::int32_t>(xs.size()), 0.0, p, d, tv);
  return wrap(id);
}

Scalar Record::dot(std::span<const Scalar> xs, std::span<const Scalar> ys) {
  require(xs.size() == ys.size(), "dot: length mismatch");
  if (xs.empty()) return Scalar(0.0);
  double p = 0.0, d = 0.0;
  bool tv = true;
  const std::size_t off = arena_.size();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require(xs[i].is_constant() || xs[i].rec_ == this, "dot: value from another record");
    require(ys[i].is_constant() || ys[i].rec_ == this, "dot: value from another record");
    const std::int32_t xi = materialize(xs[i]);
    const std::int32_t yi = materialize(ys[i]);
    arena_.push_back(xi);
    arena_.push_back(yi);
    p += primal_[xi] * primal_[yi];
    d += tangent_[xi] * primal_[yi] + primal_[xi] * tangent_[yi];
    tv = tv && tvalid_[xi] && tvalid_[yi];
  }
  const std::int32_t id = push(kDot, static_cast<std::int32_t>(off),
                               static_cast<std::int32_t>(xs.size()), 0.0, p, d, tv);
  return wrap(id);
}

Scalar Record::bias_dot(const Scalar& bias, std::span<const Scalar> xs,
                        std::span<const Scalar> ys) {
  require(xs.size() == ys.size(), "bias_dot: length mismatch");
  require(bias.is_constant() || bias.rec_ == this, "bias_dot: value from another record");
  const std::size_t off = arena_.size();
  const std::int32_t bi = materialize(bias);
  arena_.push_back(bi);
  double p = primal_[bi], d = tangent_[bi];
  bool tv = tvalid_[bi] != 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require(xs[i].is_constant() || xs[i].rec_ == this, "bias_dot: value from another record");
    require(ys[i].is_constant() || ys[i].rec_ == this, "bias_dot: value from another record");
    const std::int32_t xi = materialize(xs[i]);
    const std::int32_t yi = materialize(ys[i]);
    arena_.push_back(xi);
    arena_.push_back(yi);
    p += primal_[xi] * primal_[yi];
    d += tangent_[xi] * primal_[yi] + primal_[xi] * tangent_[yi];
    tv = tv && tvalid_[xi] && tvalid_[yi];
  }
  const std::int32_t id = push(kBiasDot, static_cast<std::int32_t>(off),
                               static_cast<std::int32_t>(xs.size()), 0.0, p, d, tv);
  return wrap(id);
}

void Record::ensure_adjoints() {
  if (abar_.size() < op_.size()) abar_.resize(op_.size(), 0.0);
  if (bbar_.size() < op_.size()) bbar_.resize(op_.size(), 0.0);
}

void Record::reverse_sweep(std::size_t lo, std::size_t hi) {
  double* ab = abar_.data();
  double* bb = bbar_.data();
  const double* pr = primal_.data();
  const double* tg = tangent_.data();
  for (std::size_t c = hi; c-- > lo;) {
    const double ac = ab[c];
    const double bc = bb[c];
    if (ac == 0.0 && bc == 0.0) continue;
    const std::int32_t a = pa_[c];
    const std::int32_t b = pb_[c];
    switch (op_[c]) {
      case kParam:
      case kInput:
      case kConst:
        break;
      case kAdd:
        ab[a] += ac; bb[a] += bc;
        ab[b] += ac; bb[b] += bc;
        break;
      case kSub:
        ab[a] += ac; bb[a] += bc;
        ab[b] -= ac; bb[b] -= bc;
        break;
      case kMul:
        ab[a] += ac * pr[b] + bc * tg[b];
        bb[a] += bc * pr[b];
        ab[b] += ac * pr[a] + bc * tg[a];
        bb[b] += bc * pr[a];
        break;
      case kDiv: {
        const double inv = 1.0 / pr[b];
        const double p = pr[c];
        ab[a] += ac * inv - bc * tg[b] * inv * inv;
        bb[a] += bc * inv;
        ab[b] += -ac * p * inv +
                 bc * (2.0 * p * tg[b] - tg[a]) * inv * inv;
        bb[b] += -bc * p * inv;
        break;
      }
      case kNeg:
        ab[a] -= ac; bb[a] -= bc;
        break;
      case kAddC:
        ab[a] += ac; bb[a] += bc;
        break;
      case kMulC: {
        const double k = aux_[c];
        ab[a] += ac * k; bb[a] += bc * k;
        break;
      }
      case kCDiv: {
        const double inva = 1.0 / pr[a];
        const double fa = -pr[c] * inva;
        ab[a] += ac * fa + bc * (-2.0 * fa * inva) * tg[a];
        bb[a] += bc * fa;
        break;
      }
      case kPowInt: {
        const int n = static_cast<int>(aux_[c]);
        const double q = ipow(pr[a], n - 2);
        const double fa = n * q * pr[a];
        const double faa = n * (n - 1) * q;
        ab[a] += ac * fa + bc * faa * tg[a];
        bb[a] += bc * fa;
        break;
      }
      case kSin: {
        const double fa = aux_[c];
        ab[a] += ac * fa - bc * pr[c] * tg[a];
        bb[a] += bc * fa;
        break;
      }
      case kCos: {
        const double fa = aux_[c];
        ab[a] += ac * fa - bc * pr[c] * tg[a];
        bb[a] += bc * fa;
        break;
      }
      case kExp: {
        const double p = pr[c];
        ab[a] += (ac + bc * tg[a]) * p;
        bb[a] += bc * p;
        break;
      }
      case kTanh: {
        const double p = pr[c];
        const double fa = 1.0 - p * p;
        ab[a] += ac * fa - bc * 2.0 * p * fa * tg[a];
        bb[a] += bc * fa;
        break;
      }
      case kLogistic: {
        const double p = pr[c];
        const double fa = p * (1.0 - p);
        ab[a] += ac * fa + bc * fa * (1.0 - 2.0 * p) * tg[a];
        bb[a] += bc * fa;
        break;
      }
      case kTangentOf:
        bb[a] += ac;
        break;
      case kSum: {
        const std::int32_t* ids = arena_.data() + a;
        for (std::int32_t i = 0; i < b; ++i) {
          ab[ids[i]] += ac;
          bb[ids[i]] += bc;
        }
        break;
      }
      case kDot: {
        const std::int32_t* ids = arena_.data() + a;
        for (std::int32_t i = 0; i < b; ++i) {
          const std::int32_t x = ids[2 * i];
          const std::int32_t y = ids[2 * i + 1];
          ab[x] += ac * pr[y] + bc * tg[y];
          bb[x] += bc * pr[y];
          ab[y] += ac * pr[x] + bc * tg[x];
          bb[y] += bc * pr[x];
        }
        break;
      }
      case kBiasDot: {
        const std::int32_t* ids = arena_.data() + a;
        ab[ids[0]] += ac;
        bb[ids[0]] += bc;
        for (std::int32_t i = 0; i < b; ++i) {
          const std::int32_t x = ids[1 + 2 * i];
          const std::int32_t y = ids[2 + 2 * i];
          ab[x] += ac * pr[y] + bc * tg[y];
          bb[x] += bc * pr[y];
          ab[y] += ac * pr[x] + bc * tg[x];
          bb[y] += bc * pr[x];
        }
        break;
      }
    }
  }
}

std::vector<double> Record::gradient(const Scalar& out) {
  require(out.rec_ == this, "backward: output from another record");
  abar_.assign(op_.size(), 0.0);
  bbar_.assign(op_.size(), 0.0);
  abar_[out.id_] = 1.0;
  reverse_sweep(0, static_cast<std::size_t>(out.id_) + 1);
  std::vector<double> grad(params_.size());
  for (std::size_t i = 0; i < params_.size(); ++i) {
    grad[i] = abar_[params_[i]];
    if (!std::isfinite(grad[i]))
      fail("non-finite gradient for parameter " + std::to_string(i));
  }
  return grad;
}

void Record::begin_accumulation() {
  abar_.assign(op_.size(), 0.0);
  bbar_.assign(op_.size(), 0.0);
}

void Record::backward_suffix(const Scalar& out, double seed, const Mark& from) {
  require(out.rec_ == this, "backward: output from another record");
  require(out.id_ >= static_cast<std::int32_t>(from.nodes),
          "backward_suffix: output below the accumulation mark");
  const std::size_t n = op_.size();
  if (abar_.size() < n) {
    abar_.resize(n, 0.0);
    bbar_.resize(n, 0.0);
  } else {
    std::fill(abar_.begin() + from.nodes, abar_.begin() + n, 0.0);
    std::fill(bbar_.begin() + from.nodes, bbar_.begin() + n, 0.0);
  }
  abar_[out.id_] += seed;
  reverse_sweep(from.nodes, static_cast<std::size_t>(out.id_) + 1);
}

void Record::collect_param_adjoints(std::span<double> grad_out) const {
  require(grad_out.size() == params_.size(), "gradient length mismatch");
  for (std::size_t i = 0; i < params_.size(); ++i) {
    const double g = abar_[params_[i]];
    if (!std::isfinite(g))
      fail("non-finite gradient for parameter " + std::to_string(i));
    grad_out[i] = g;
  }
}

void Record::replay() {
  for (std::size_t c = 0; c < op_.size(); ++c) {
    const std::int32_t a = pa_[c];
    const std::int32_t b = pb_[c];
    switch (op_[c]) {
      case kParam:
      case kInput:
      case kConst:
        break;
      case kAdd:
        primal_[c] = primal_[a] + primal_[b];
        tangent_[c] = tangent_[a] + tangent_[b];
        break;
      case kSub:
        primal_[c] = primal_[a] - primal_[b];
        tangent_[c] = tangent_[a] - tangent_[b];
        break;
      case kMul:
        primal_[c] = primal_[a] * primal_[b];
        tangent_[c] = tangent_[a] * primal_[b] + primal_[a] * tangent_[b];
        break;
      case kDiv:
        primal_[c] = primal_[a] / primal_[b];
        tangent_[c] = (tangent_[a] - primal_[c] * tangent_[b]) / primal_[b];
        break;
      case kNeg:
        primal_[c] = -primal_[a];
        tangent_[c] = -tangent_[a];
        break;
      case kAddC:
        primal_[c] = primal_[a] + aux_[c];
        tangent_[c] = tangent_[a];
        break;
      case kMulC:
        primal_[c] = primal_[a] * aux_[c];
        tangent_[c] = tangent_[a] * aux_[c];
        break;
      case kCDiv:
        primal_[c] = aux_[c] / primal_[a];
        tangent_[c] = -primal_[c] / primal_[a] * tangent_[a];
        break;
      case kPowInt: {
        const int n = static_cast<int>(aux_[c]);
        primal_[c] = ipow(primal_[a], n);
        tangent_[c] = n * ipow(primal_[a], n - 1) * tangent_[a];
        break;
      }
      case kSin:
        primal_[c] = std::sin(primal_[a]);
        aux_[c] = std::cos(primal_[a]);
        tangent_[c] = aux_[c] * tangent_[a];
        break;
      case kCos:
        primal_[c] = std::cos(primal_[a]);
        aux_[c] = -std::sin(primal_[a]);
        tangent_[c] = aux_[c] * tangent_[a];
        break;
      case kExp:
        primal_[c] = std::exp(primal_[a]);
        tangent_[c] = primal_[c] * tangent_[a];
        break;
      case kTanh:
        primal_[c] = std::tanh(primal_[a]);
        tangent_[c] = (1.0 - primal_[c] * primal_[c]) * tangent_[a];
        break;
      case kLogistic:
        primal_[c] = 1.0 / (1.0 + std::exp(-primal_[a]));
        tangent_[c] = primal_[c] * (1.0 - primal_[c]) * tangent_[a];
        break;
      case kTangentOf:
        primal_[c] = tangent_[a];
        tangent_[c] = 0.0;
        break;
      case kSum: {
        double p = 0.0, d = 0.0;
        for (std::int32_t i = 0; i < b; ++i) {
          p += primal_[arena_[a + i]];
          d += tangent_[arena_[a + i]];
        }
        primal_[c] = p;
        tangent_[c] = d;
        break;
      }
      case kDot: {
        double p = 0.0, d = 0.0;
        for (std::int32_t i = 0; i < b; ++i) {
          const std::int32_t x = arena_[a + 2 * i];
          const std::int32_t y = arena_[a + 2 * i + 1];
          p += primal_[x] * primal_[y];
          d += tangent_[x] * primal_[y] + primal_[x] * tangent_[y];
        }
        primal_[c] = p;
        tangent_[c] = d;
        break;
      }
      case kBiasDot: {
        const std::int32_t bi = arena_[a];
        double p = primal_[bi], d = tangent_[bi];
        for (std::int32_t i = 0; i < b; ++i) {
          const std::int32_t x = arena_[a + 1 + 2 * i];
          const std::int32_t y = arena_[a + 2 + 2 * i];
          p += primal_[x] * primal_[y];
          d += tangent_[x] * primal_[y] + primal_[x] * tangent_[y];
        }
        primal_[c] = p;
        tangent_[c] = d;
        break;
      }
    }
  }
}

}  // namespace kandae::ad
