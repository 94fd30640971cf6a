#include "ercd/polynomial.hpp"

#include <cstdint>
#include <mutex>
#include <sstream>
#include <vector>

namespace ercd {

namespace {

Poly monic(const Poly& p) {
  if (p.isZero()) return p;
  return p * p.leading().second.inverse();
}

// Univariate view in `var`: degree -> coefficient polynomial in the rest.
std::map<int, Poly> asUnivariate(const Poly& p, int var) {
  std::map<int, Poly> r;
  for (const auto& [mo, c] : p.terms()) {
    Mono rest = mo;
    int d = rest[var];
    rest[var] = 0;
    r[d].addTerm(rest, c);
  }
  return r;
}

Poly timesVarPow(const Poly& p, int var, int pow) {
  Poly r;
  for (const auto& [mo, c] : p.terms()) {
    Mono m2 = mo;
    m2[var] += pow;
    r.addTerm(m2, c);
  }
  return r;
}

Poly leadCoeffIn(const Poly& p, int var) {
  auto uni = asUnivariate(p, var);
  return uni.rbegin()->second;
}

// Pseudo-remainder of a by b with respect to var.
Poly prem(Poly a, const Poly& b, int var) {
  const int db = b.degree(var);
  const Poly lb = leadCoeffIn(b, var);
  while (!a.isZero() && a.degree(var) >= db) {
    const int da = a.degree(var);
    const Poly la = leadCoeffIn(a, var);
    a = lb * a - timesVarPow(la, var, da - db) * b;
  }
  return a;
}

Poly contentIn(const Poly& p, int var) {
  Poly g;
  for (const auto& [deg, coeff] : asUnivariate(p, var)) {
    g = polyGcd(g, coeff);
    if (g == Poly(1)) break;
  }
  return g;
}

// Divide out the rational scalar content so the coefficients become Gaussian
// integers with no common integer factor.
Poly removeScalarContent(const Poly& p) {
  if (p.isZero()) return p;
  mpz_class num(0);
  mpz_class den(1);
  for (const auto& [mo, c] : p.terms()) {
    num = gcd(gcd(num, c.re().get_num()), c.im().get_num());
    den = lcm(lcm(den, c.re().get_den()), c.im().get_den());
  }
  if (num == 0) num = 1;
  mpq_class factor(den, num);
  factor.canonicalize();
  if (factor == 1) return p;
  return p * GaussianRational(factor);
}

// Multivariate division with a single divisor under the lex order.  Returns
// false if b does not divide a; a positive step cap turns the routine into a
// cheap probe that may also give up on long divisions.
bool tryDivExact(const Poly& a, const Poly& b, Poly* quot, long maxSteps) {
  Poly rem = a;
  Poly q;
  const auto& [lbm, lbc] = b.leading();
  const GaussianRational lbcInv = lbc.inverse();
  long steps = 0;
  while (!rem.isZero()) {
    if (maxSteps > 0 && ++steps > maxSteps) return false;
    const auto& [lam, lac] = rem.leading();
    Mono qm;
    for (int v = 0; v < kNumVars; ++v) {
      qm[v] = lam[v] - lbm[v];
      if (qm[v] < 0) return false;
    }
    Poly t;
    t.addTerm(qm, lac * lbcInv);
    q += t;
    rem -= t * b;
  }
  if (quot) *quot = std::move(q);
  return true;
}

// Dense univariate polynomial over GaussianRational.
using Uni = std::vector<GaussianRational>;

int uniDeg(const Uni& u) {
  for (int d = static_cast<int>(u.size()) - 1; d >= 0; --d)
    if (!u[d].isZero()) return d;
  return -1;
}

// Monic univariate gcd over Q(i) by the Euclidean algorithm.
Uni uniGcd(Uni a, Uni b) {
  int da = uniDeg(a), db = uniDeg(b);
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
  }
  while (db >= 0) {
    // make b monic so coefficient growth stays mild
    const GaussianRational lead = b[db];
    if (!(lead == GaussianRational(1))) {
      const GaussianRational li = lead.inverse();
      for (int j = 0; j <= db; ++j) b[j] *= li;
    }
    while (da >= db) {
      const GaussianRational f = a[da];
      for (int j = 0; j < db; ++j) a[da - db + j] -= f * b[j];
      a[da] = GaussianRational(0);
      da = uniDeg(a);
      if (da < 0) break;
    }
    std::swap(a, b);
    da = uniDeg(a);
    db = uniDeg(b);
  }
  a.resize(da + 1);
  const GaussianRational li = a[da].inverse();
  for (auto& c : a) c *= li;
  return a;
}

Poly uniToPoly(const Uni& u, int var) {
  Poly p;
  for (int d = 0; d < static_cast<int>(u.size()); ++d) {
    Mono mo{0, 0, 0, 0};
    mo[var] = d;
    p.addTerm(mo, u[d]);
  }
  return p;
}

// Extract the dense univariate image in `var`, all other variables constant.
Uni toUni(const Poly& p, int var) {
  Uni u(p.degree(var) + 1);
  for (const auto& [mo, c] : p.terms()) u[mo[var]] += c;
  return u;
}

// ---- modular images over GF(p^2) ----------------------------------------
//
// Primes p = 3 (mod 4) keep i a formal square root of -1, so the real and
// imaginary parts of every Gaussian-rational coefficient map to separate
// residues and can be reconstructed independently.

using u64 = std::uint64_t;

inline u64 addm(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulm(u64 a, u64 b, u64 p) { return (a * b) % p; }  // p < 2^31

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}
u64 invm(u64 a, u64 p) {
  // extended euclid; a is nonzero mod the odd prime p
  long long t0 = 0, t1 = 1;
  long long r0 = static_cast<long long>(p), r1 = static_cast<long long>(a % p);
  while (r1 != 0) {
    const long long q = r0 / r1;
    const long long r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const long long t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return static_cast<u64>(t0 < 0 ? t0 + static_cast<long long>(p) : t0);
}

struct Fp2 {
  u64 re = 0, im = 0;
  bool isZero() const { return re == 0 && im == 0; }
  friend bool operator==(const Fp2& a, const Fp2& b) { return a.re == b.re && a.im == b.im; }
};

inline Fp2 f2add(Fp2 a, Fp2 b, u64 p) { return {addm(a.re, b.re, p), addm(a.im, b.im, p)}; }
inline Fp2 f2sub(Fp2 a, Fp2 b, u64 p) { return {subm(a.re, b.re, p), subm(a.im, b.im, p)}; }
inline Fp2 f2mul(Fp2 a, Fp2 b, u64 p) {
  return {subm(mulm(a.re, b.re, p), mulm(a.im, b.im, p), p),
          addm(mulm(a.re, b.im, p), mulm(a.im, b.re, p), p)};
}
Fp2 f2inv(Fp2 a, u64 p) {
  // (re - im i) / (re^2 + im^2); the norm is nonzero since -1 is a nonresidue
  u64 n = addm(mulm(a.re, a.re, p), mulm(a.im, a.im, p), p);
  u64 ni = invm(n, p);
  return {mulm(a.re, ni, p), mulm(subm(0, a.im, p), ni, p)};
}

// Growing list of 31-bit primes congruent to 3 mod 4.
u64 modPrime(size_t idx) {
  static std::mutex mu;
  static std::vector<u64> primes;
  static mpz_class cand("2147483651");  // just above 2^31, scan downward
  std::lock_guard<std::mutex> lk(mu);
  while (primes.size() <= idx) {
    cand -= 4;
    while (mpz_probab_prime_p(cand.get_mpz_t(), 30) == 0) cand -= 4;
    primes.push_back(cand.get_ui());
  }
  return primes[idx];
}

struct ModFail {};  // prime or evaluation points unusable

// Sparse multivariate polynomial over GF(p^2).
struct ModPoly {
  std::map<Mono, Fp2> t;

  bool isZero() const { return t.empty(); }
  bool isConstant() const {
    return t.empty() || (t.size() == 1 && t.begin()->first == Mono{0, 0, 0, 0});
  }
  int degree(int var) const {
    int d = 0;
    for (const auto& [mo, c] : t) d = std::max(d, mo[var]);
    return d;
  }
  void add(const Mono& mo, Fp2 c, u64 p) {
    if (c.isZero()) return;
    auto it = t.find(mo);
    if (it == t.end()) {
      t.emplace(mo, c);
    } else {
      it->second = f2add(it->second, c, p);
      if (it->second.isZero()) t.erase(it);
    }
  }
  const std::pair<const Mono, Fp2>& leading() const { return *t.rbegin(); }
};

// Reduce a Gaussian-integer-coefficient polynomial mod p; throws ModFail if a
// denominator vanishes mod p (cannot happen after removeScalarContent).
ModPoly reduceMod(const Poly& a, u64 p) {
  ModPoly r;
  auto toFp = [&](const mpq_class& q) -> u64 {
    u64 num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    if (q.get_den() == 1) return num;
    u64 den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) throw ModFail{};
    return mulm(num, invm(den, p), p);
  };
  for (const auto& [mo, c] : a.terms()) r.add(mo, Fp2{toFp(c.re()), toFp(c.im())}, p);
  return r;
}

ModPoly mSub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r = a;
  for (const auto& [mo, c] : b.t) r.add(mo, f2sub(Fp2{}, c, p), p);
  return r;
}

ModPoly mMul(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  for (const auto& [ma, ca] : a.t)
    for (const auto& [mb, cb] : b.t) {
      Mono mo;
      for (int v = 0; v < kNumVars; ++v) mo[v] = ma[v] + mb[v];
      r.add(mo, f2mul(ca, cb, p), p);
    }
  return r;
}

ModPoly mScale(const ModPoly& a, Fp2 s, u64 p) {
  ModPoly r;
  for (const auto& [mo, c] : a.t) r.t.emplace(mo, f2mul(c, s, p));
  return r;
}

ModPoly mMonic(const ModPoly& a, u64 p) {
  if (a.isZero()) return a;
  return mScale(a, f2inv(a.leading().second, p), p);
}

ModPoly mSubstitute(const ModPoly& a, int var, u64 val, u64 p) {
  std::vector<Fp2> pow(a.degree(var) + 1, Fp2{1, 0});
  for (size_t e = 1; e < pow.size(); ++e) pow[e] = f2mul(pow[e - 1], Fp2{val, 0}, p);
  ModPoly r;
  for (const auto& [mo, c] : a.t) {
    Mono m2 = mo;
    m2[var] = 0;
    r.add(m2, f2mul(c, pow[mo[var]], p), p);
  }
  return r;
}

bool mTryDiv(const ModPoly& a, const ModPoly& b, ModPoly* quot, u64 p) {
  ModPoly rem = a;
  ModPoly q;
  const auto& [lbm, lbc] = b.leading();
  const Fp2 lbi = f2inv(lbc, p);
  while (!rem.isZero()) {
    const auto& [lam, lac] = rem.leading();
    Mono qm;
    for (int v = 0; v < kNumVars; ++v) {
      qm[v] = lam[v] - lbm[v];
      if (qm[v] < 0) return false;
    }
    ModPoly t;
    t.t.emplace(qm, f2mul(lac, lbi, p));
    q.add(qm, t.t.begin()->second, p);
    rem = mSub(rem, mMul(t, b, p), p);
  }
  if (quot) *quot = std::move(q);
  return true;
}

ModPoly mLeadCoeffIn(const ModPoly& a, int var) {
  const int d = a.degree(var);
  ModPoly r;
  for (const auto& [mo, c] : a.t) {
    if (mo[var] != d) continue;
    Mono m2 = mo;
    m2[var] = 0;
    r.t.emplace(m2, c);
  }
  return r;
}

// Dense univariate gcd over GF(p^2), monic.
using MUni = std::vector<Fp2>;

int mUniDeg(const MUni& u) {
  for (int d = static_cast<int>(u.size()) - 1; d >= 0; --d)
    if (!u[d].isZero()) return d;
  return -1;
}

MUni mToUni(const ModPoly& a, int var) {
  MUni u(a.degree(var) + 1);
  u64 dummy = 0;
  (void)dummy;
  for (const auto& [mo, c] : a.t) u[mo[var]] = c;  // other vars are constant here
  return u;
}

MUni mUniGcd(MUni a, MUni b, u64 p) {
  int da = mUniDeg(a), db = mUniDeg(b);
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
  }
  while (db >= 0) {
    const Fp2 li = f2inv(b[db], p);
    while (da >= db) {
      const Fp2 f = f2mul(a[da], li, p);
      for (int j = 0; j <= db; ++j) a[da - db + j] = f2sub(a[da - db + j], f2mul(f, b[j], p), p);
      a[da] = Fp2{};
      da = mUniDeg(a);
      if (da < 0) break;
    }
    std::swap(a, b);
    da = mUniDeg(a);
    db = mUniDeg(b);
  }
  a.resize(da + 1);
  const Fp2 li = f2inv(a[da], p);
  for (auto& c : a) c = f2mul(c, li, p);
  return a;
}

ModPoly mFromUni(const MUni& u, int var, u64 p) {
  ModPoly r;
  for (int d = 0; d < static_cast<int>(u.size()); ++d) {
    Mono mo{0, 0, 0, 0};
    mo[var] = d;
    r.add(mo, u[d], p);
  }
  return r;
}

ModPoly modGcd(const ModPoly& a, const ModPoly& b, u64 p);

ModPoly mContentIn(const ModPoly& a, int var, u64 p) {
  std::map<int, ModPoly> uni;
  for (const auto& [mo, c] : a.t) {
    Mono rest = mo;
    int d = rest[var];
    rest[var] = 0;
    uni[d].t.emplace(rest, c);
  }
  ModPoly g;
  for (const auto& [deg, coeff] : uni) {
    g = modGcd(g, coeff, p);
    if (g.isConstant() && !g.isZero()) break;
  }
  return g;
}

ModPoly mOne() {
  ModPoly r;
  r.t.emplace(Mono{0, 0, 0, 0}, Fp2{1, 0});
  return r;
}

// Brown interpolation for the multivariate gcd mod p: evaluate down to
// univariate images, rescale by gamma, Newton-interpolate back up, and verify
// by trial division mod p.
class ModBrown {
public:
  ModBrown(const ModPoly& a, const ModPoly& b, int mainVar, u64 p)
      : a_(a), b_(b), x_(mainVar), p_(p) {
    degAx_ = a_.degree(x_);
    degBx_ = b_.degree(x_);
    gamma_ = modGcd(mLeadCoeffIn(a_, x_), mLeadCoeffIn(b_, x_), p_);
    for (int v = 0; v < kNumVars; ++v) {
      if (v == x_) continue;
      if (a_.degree(v) == 0 && b_.degree(v) == 0) continue;
      vars_.push_back(v);
      bound_.push_back(std::min(a_.degree(v), b_.degree(v)) + gamma_.degree(v));
    }
  }

  ModPoly run() {
    for (int attempt = 0; attempt < 6; ++attempt) {
      earlyStop_ = attempt < 2;
      ModPoly h;
      try {
        h = interp(static_cast<int>(vars_.size()) - 1, a_, b_, gamma_);
      } catch (const Restart&) {
        continue;
      } catch (const Unlucky&) {
        offset_ += 37;
        continue;
      }
      if (coprime_) return mOne();
      ModPoly cont = mContentIn(h, x_, p_);
      if (!cont.isConstant()) {
        ModPoly q;
        if (!mTryDiv(h, cont, &q, p_)) throw ModFail{};
        h = std::move(q);
      }
      if (mTryDiv(a_, h, nullptr, p_) && mTryDiv(b_, h, nullptr, p_)) return mMonic(h, p_);
      offset_ += 37;
      expectedDeg_ = -1;
    }
    throw ModFail{};
  }

private:
  struct Unlucky {};
  struct Restart {};

  ModPoly interp(int level, const ModPoly& pa, const ModPoly& pb, const ModPoly& pg) {
    if (coprime_) return ModPoly{};
    if (level < 0) return leaf(pa, pb, pg);
    const int v = vars_[level];
    const int need = bound_[level] + 1;
    ModPoly r;
    ModPoly modulus = mOne();
    int have = 0;
    int stable = 0;
    for (long k = 0; k < need + 60 && have < need; ++k) {
      const u64 t = (offset_ + k) % p_;
      ModPoly ea = mSubstitute(pa, v, t, p_);
      if (ea.degree(x_) != degAx_) continue;
      ModPoly eb = mSubstitute(pb, v, t, p_);
      if (eb.degree(x_) != degBx_) continue;
      ModPoly eg = mSubstitute(pg, v, t, p_);
      if (eg.isZero()) continue;
      ModPoly img;
      try {
        img = interp(level - 1, ea, eb, eg);
      } catch (const Unlucky&) {
        continue;
      }
      if (coprime_) return ModPoly{};
      ModPoly diff = mSub(img, mSubstitute(r, v, t, p_), p_);
      if (diff.isZero()) {
        if (++stable >= 2 && earlyStop_) return r;
      } else {
        stable = 0;
        const Fp2 denom = mSubstitute(modulus, v, t, p_).t.begin()->second;
        r = mSub(r, mScale(mMul(diff, modulus, p_), f2sub(Fp2{}, f2inv(denom, p_), p_), p_), p_);
      }
      ModPoly lin;
      lin.t.emplace(Mono{0, 0, 0, 0}, Fp2{subm(0, t, p_), 0});
      Mono vm{0, 0, 0, 0};
      vm[v] = 1;
      lin.add(vm, Fp2{1, 0}, p_);
      modulus = mMul(modulus, lin, p_);
      ++have;
    }
    if (have < need) throw Unlucky{};
    return r;
  }

  ModPoly leaf(const ModPoly& pa, const ModPoly& pb, const ModPoly& pg) {
    MUni u = mUniGcd(mToUni(pa, x_), mToUni(pb, x_), p_);
    const int d = mUniDeg(u);
    if (d == 0) {
      coprime_ = true;
      return ModPoly{};
    }
    if (expectedDeg_ < 0) {
      expectedDeg_ = d;
    } else if (d > expectedDeg_) {
      throw Unlucky{};
    } else if (d < expectedDeg_) {
      expectedDeg_ = d;
      throw Restart{};
    }
    const Fp2 g = pg.t.begin()->second;
    for (auto& c : u) c = f2mul(c, g, p_);
    return mFromUni(u, x_, p_);
  }

  const ModPoly& a_;
  const ModPoly& b_;
  int x_;
  u64 p_;
  int degAx_;
  int degBx_;
  ModPoly gamma_;
  std::vector<int> vars_;
  std::vector<int> bound_;
  int expectedDeg_ = -1;
  long offset_ = 0;
  bool earlyStop_ = true;
  bool coprime_ = false;
};

// Monic multivariate gcd over GF(p^2); throws ModFail on bad luck.
ModPoly modGcd(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.isZero()) return mMonic(b, p);
  if (b.isZero()) return mMonic(a, p);
  if (a.isConstant() || b.isConstant()) return mOne();

  // shared monomial content
  Mono ma = a.t.begin()->first, mb = b.t.begin()->first;
  for (const auto& [mo, c] : a.t)
    for (int v = 0; v < kNumVars; ++v) ma[v] = std::min(ma[v], mo[v]);
  for (const auto& [mo, c] : b.t)
    for (int v = 0; v < kNumVars; ++v) mb[v] = std::min(mb[v], mo[v]);
  Mono shared;
  bool anyShift = false;
  for (int v = 0; v < kNumVars; ++v) {
    shared[v] = std::min(ma[v], mb[v]);
    if (ma[v] > 0 || mb[v] > 0) anyShift = true;
  }
  if (anyShift) {
    auto shift = [](const ModPoly& q, const Mono& mc) {
      ModPoly r;
      for (const auto& [mo, c] : q.t) {
        Mono m2;
        for (int v = 0; v < kNumVars; ++v) m2[v] = mo[v] - mc[v];
        r.t.emplace(m2, c);
      }
      return r;
    };
    ModPoly g = modGcd(shift(a, ma), shift(b, mb), p);
    ModPoly mono;
    mono.t.emplace(shared, Fp2{1, 0});
    return mMul(g, mono, p);
  }

  int var = -1;
  int best = 0;
  for (int v = 0; v < kNumVars; ++v) {
    const int mv = std::min(a.degree(v), b.degree(v));
    if (mv > best) {
      best = mv;
      var = v;
    }
  }
  if (var == -1) return mOne();  // no shared variable: gcd is constant

  const ModPoly ca = mContentIn(a, var, p);
  const ModPoly cb = mContentIn(b, var, p);
  ModPoly pa = a, pb = b;
  if (!ca.isConstant()) {
    ModPoly q;
    if (!mTryDiv(a, ca, &q, p)) throw ModFail{};
    pa = std::move(q);
  }
  if (!cb.isConstant()) {
    ModPoly q;
    if (!mTryDiv(b, cb, &q, p)) throw ModFail{};
    pb = std::move(q);
  }

  bool univariate = true;
  for (int v = 0; v < kNumVars && univariate; ++v) {
    if (v == var) continue;
    if (pa.degree(v) > 0 || pb.degree(v) > 0) univariate = false;
  }

  ModPoly g;
  if (univariate) {
    g = mFromUni(mUniGcd(mToUni(pa, var), mToUni(pb, var), p), var, p);
  } else {
    ModBrown brown(pa, pb, var, p);
    g = brown.run();
  }
  return mMonic(mMul(modGcd(ca, cb, p), g, p), p);
}

// ---- CRT and rational reconstruction ------------------------------------

bool ratReconstruct(const mpz_class& r, const mpz_class& M, mpq_class* out) {
  mpz_class half = M / 2;
  mpz_class bound = sqrt(half);
  mpz_class r0 = M, r1 = r % M;
  if (r1 < 0) r1 += M;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return false;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (t1 > bound) return false;
  if (gcd(r1, t1) != 1) return false;
  *out = mpq_class(r1, t1);
  out->canonicalize();
  return true;
}

// CRT accumulator for the coefficients of the monic modular gcd images.
struct CrtState {
  struct Residue {
    mpz_class re, im;
  };
  std::map<Mono, Residue> coeffs;
  mpz_class modulus = 1;
  Mono lead{-1, -1, -1, -1};

  // Returns false if this prime's image disagrees with the consensus in a way
  // that resets the accumulator (previous primes were unlucky).
  void fold(const ModPoly& g, u64 p) {
    const Mono gl = g.leading().first;
    if (lead[0] < 0 || gl < lead) {
      // first image, or strictly smaller leading monomial: start over
      coeffs.clear();
      modulus = 1;
      lead = gl;
    } else if (lead < gl) {
      return;  // unlucky prime, skip
    }
    const mpz_class pz(static_cast<unsigned long>(p));
    const mpz_class newMod = modulus * pz;
    // CRT each monomial of the union of supports.
    auto combine = [&](mpz_class acc, u64 res) -> mpz_class {
      // x = acc (mod modulus), x = res (mod p)
      mpz_class inv;
      mpz_class mm = modulus % pz;
      mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
      mpz_class diff = (mpz_class(static_cast<unsigned long>(res)) - acc % pz + pz) % pz;
      return acc + modulus * ((diff * inv) % pz);
    };
    std::map<Mono, Residue> next;
    auto it = coeffs.begin();
    auto jt = g.t.begin();
    while (it != coeffs.end() || jt != g.t.end()) {
      if (jt == g.t.end() || (it != coeffs.end() && it->first < jt->first)) {
        next[it->first] = {combine(it->second.re, 0), combine(it->second.im, 0)};
        ++it;
      } else if (it == coeffs.end() || jt->first < it->first) {
        next[jt->first] = {combine(0, jt->second.re), combine(0, jt->second.im)};
        ++jt;
      } else {
        next[it->first] = {combine(it->second.re, jt->second.re),
                           combine(it->second.im, jt->second.im)};
        ++it;
        ++jt;
      }
    }
    coeffs = std::move(next);
    modulus = newMod;
  }

  bool reconstruct(Poly* out) const {
    Poly r;
    for (const auto& [mo, res] : coeffs) {
      mpq_class re, im;
      if (!ratReconstruct(res.re, modulus, &re)) return false;
      if (!ratReconstruct(res.im, modulus, &im)) return false;
      r.addTerm(mo, GaussianRational(re, im));
    }
    *out = std::move(r);
    return true;
  }
};

Poly shiftDown(const Poly& p, const Mono& mc) {
  Poly r;
  for (const auto& [mo, c] : p.terms()) {
    Mono m2;
    for (int v = 0; v < kNumVars; ++v) m2[v] = mo[v] - mc[v];
    r.addTerm(m2, c);
  }
  return r;
}

Mono monomialContent(const Poly& p) {
  Mono mc = p.terms().begin()->first;
  for (const auto& [mo, c] : p.terms())
    for (int v = 0; v < kNumVars; ++v) mc[v] = std::min(mc[v], mo[v]);
  return mc;
}

// Primitive PRS gcd of two polynomials primitive w.r.t. var.  Scalar content
// is stripped after every pseudo-remainder; last-resort fallback when the
// modular gcd runs out of primes.
Poly primitivePrsGcd(Poly p, Poly q, int var) {
  if (p.degree(var) < q.degree(var)) std::swap(p, q);
  while (true) {
    Poly r = prem(p, q, var);
    if (r.isZero()) break;
    if (r.degree(var) == 0) return Poly(1);  // primitive inputs, constant-in-var gcd
    r = removeScalarContent(r);
    r = polyDivExact(r, contentIn(r, var));
    p = std::move(q);
    q = std::move(r);
  }
  return polyDivExact(q, contentIn(q, var));
}

Poly polyGcdCore(const Poly& a, const Poly& b) {
  if (a.isZero()) return monic(b);
  if (b.isZero()) return monic(a);
  if (a.isConstant() || b.isConstant()) return Poly(1);

  // Factor out the shared monomial content first.
  const Mono ma = monomialContent(a);
  const Mono mb = monomialContent(b);
  Mono shared;
  bool anyShift = false;
  for (int v = 0; v < kNumVars; ++v) {
    shared[v] = std::min(ma[v], mb[v]);
    if (ma[v] > 0 || mb[v] > 0) anyShift = true;
  }
  if (anyShift) {
    Poly g = polyGcd(shiftDown(a, ma), shiftDown(b, mb));
    Poly mono;
    mono.addTerm(shared, GaussianRational(1));
    return g * mono;
  }

  // Cheap probe for the frequent total-cancellation case.
  const long probe = 4 * static_cast<long>(a.terms().size() + b.terms().size()) + 16;
  if (tryDivExact(a, b, nullptr, probe)) return monic(b);
  if (tryDivExact(b, a, nullptr, probe)) return monic(a);

  int var = -1;
  int best = 0;
  for (int v = 0; v < kNumVars; ++v) {
    const int mv = std::min(a.degree(v), b.degree(v));
    if (mv > best) {
      best = mv;
      var = v;
    }
  }
  if (var == -1) return Poly(1);  // no shared variable: gcd is constant

  bool univariate = true;
  for (int v = 0; v < kNumVars && univariate; ++v) {
    if (v == var) continue;
    if (a.degree(v) > 0 || b.degree(v) > 0) univariate = false;
  }
  if (univariate) return uniToPoly(uniGcd(toUni(a, var), toUni(b, var)), var);

  // Modular images: gcd mod several 31-bit primes, CRT the monic images and
  // reconstruct the rational coefficients.  Exact trial division certifies
  // the candidate, so unlucky primes only cost retries.
  const Poly za = removeScalarContent(a);
  const Poly zb = removeScalarContent(b);
  CrtState crt;
  for (size_t pi = 0; pi < 16; ++pi) {
    const u64 p = modPrime(pi);
    ModPoly ga;
    try {
      const ModPoly ra = reduceMod(za, p);
      const ModPoly rb = reduceMod(zb, p);
      // p must keep the lex-leading terms alive for the images to be usable
      if (ra.isZero() || rb.isZero()) continue;
      if (!(ra.leading().first == za.leading().first)) continue;
      if (!(rb.leading().first == zb.leading().first)) continue;
      ga = modGcd(ra, rb, p);
    } catch (const ModFail&) {
      continue;
    }
    if (ga.isConstant()) return Poly(1);  // certified coprime
    crt.fold(ga, p);
    Poly cand;
    if (crt.reconstruct(&cand) && !cand.isZero() && tryDivExact(za, cand, nullptr, -1) &&
        tryDivExact(zb, cand, nullptr, -1)) {
      return monic(cand);
    }
  }

  // Last resort: primitive PRS.
  const Poly ca = contentIn(a, var);
  const Poly cb = contentIn(b, var);
  Poly p = ca.isConstant() ? a : polyDivExact(a, ca);
  Poly q = cb.isConstant() ? b : polyDivExact(b, cb);
  return monic(polyGcd(ca, cb) * primitivePrsGcd(std::move(p), std::move(q), var));
}

}  // namespace

Poly polyGcd(const Poly& a, const Poly& b) {
  // The gcd workload is highly repetitive (the same denominators recur across
  // matrix entries), so memoize on the exact operand pair.
  static std::mutex mu;
  static std::map<std::pair<Poly, Poly>, Poly> cache;
  const bool swap = b < a;
  std::pair<Poly, Poly> key = swap ? std::make_pair(b, a) : std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Poly g = polyGcdCore(a, b);
  std::lock_guard<std::mutex> lk(mu);
  if (cache.size() > 200000) cache.clear();
  cache.emplace(std::move(key), g);
  return g;
}

Poly polyDivExact(const Poly& a, const Poly& b) {
  if (b.isZero()) throw std::domain_error("polyDivExact: division by zero polynomial");
  if (b.isConstant()) return a * b.constantValue().inverse();
  Poly quot;
  if (!tryDivExact(a, b, &quot, -1)) throw std::domain_error("polyDivExact: not divisible");
  return quot;
}

Poly Poly::substitute(int var, const GaussianRational& value) const {
  std::vector<GaussianRational> pow(degree(var) + 1, GaussianRational(1));
  for (size_t e = 1; e < pow.size(); ++e) pow[e] = pow[e - 1] * value;
  Poly r;
  for (const auto& [mo, c] : terms_) {
    Mono m2 = mo;
    m2[var] = 0;
    r.addTerm(m2, c * pow[mo[var]]);
  }
  return r;
}

GaussianRational Poly::evaluate(const std::array<GaussianRational, kNumVars>& point) const {
  GaussianRational sum;
  for (const auto& [mo, c] : terms_) {
    GaussianRational t = c;
    for (int v = 0; v < kNumVars; ++v)
      for (int e = 0; e < mo[v]; ++e) t *= point[v];
    sum += t;
  }
  return sum;
}

std::string Poly::str(Track track) const {
  if (terms_.empty()) return "0";
  static const char* opNames[kNumVars] = {"m", "d1", "d2", "d3"};
  static const char* momNames[kNumVars] = {"m", "k1", "k2", "k3"};
  const char** names = (track == Track::Operator) ? opNames : momNames;

  std::ostringstream os;
  bool first = true;
  // Descending lex order so the leading term comes first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Mono& mo = it->first;
    const GaussianRational& c = it->second;
    std::string cs = c.str();
    const bool compound = cs.find_first_of("+-", 1) != std::string::npos || !c.isReal();
    std::string monoStr;
    for (int v = 0; v < kNumVars; ++v) {
      if (mo[v] == 0) continue;
      if (!monoStr.empty()) monoStr += "*";
      monoStr += names[v];
      if (mo[v] > 1) monoStr += "^" + std::to_string(mo[v]);
    }
    std::string term;
    if (monoStr.empty()) {
      term = compound ? "(" + cs + ")" : cs;
    } else if (compound) {
      term = "(" + cs + ")*" + monoStr;
    } else if (cs == "1") {
      term = monoStr;
    } else if (cs == "-1") {
      term = "-" + monoStr;
    } else {
      term = cs + "*" + monoStr;
    }
    if (!first && term[0] != '-') os << "+";
    os << term;
    first = false;
  }
  return os.str();
}

}  // namespace ercd
