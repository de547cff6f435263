#include "multijoint/sturm.h"

#include "multijoint/errors.h"

namespace multijoint {
namespace {

int CountVariations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

SturmSequence::SturmSequence(const UniPoly& u) {
  if (u.IsZero()) throw ZeroPolynomial("Sturm sequence of the zero polynomial");
  chain_.push_back(u.ContentFree());
  if (u.degree() == 0) return;
  chain_.push_back(u.Derivative().ContentFree());
  while (true) {
    UniPoly r = Rem(chain_[chain_.size() - 2], chain_.back());
    if (r.IsZero()) break;
    chain_.push_back((-r).ContentFree());
  }
  // Dividing by the gcd (the last member) gives the chain of the square-free
  // part; it stays valid when an endpoint is a multiple root.
  if (chain_.back().degree() > 0) {
    const UniPoly g = chain_.back();
    for (auto& p : chain_) p = ExactQuotient(p, g).ContentFree();
  }
}

int SturmSequence::VariationsAt(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(Sign(p(x)));
  return CountVariations(s);
}

int SturmSequence::VariationsAtNegInf() const {
  std::vector<int> s;
  for (const auto& p : chain_) {
    const int sl = Sign(p.leading());
    s.push_back(p.degree() % 2 == 0 ? sl : -sl);
  }
  return CountVariations(s);
}

int SturmSequence::VariationsAtPosInf() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(Sign(p.leading()));
  return CountVariations(s);
}

int SturmSequence::CountIn(const Rational& a, const Rational& b) const {
  return VariationsAt(a) - VariationsAt(b);
}

int SturmDistinctRealRoots(const UniPoly& u) { return SturmSequence(u).CountAll(); }

int SturmRootsInInterval(const UniPoly& u, const Rational& a, const Rational& b) {
  return SturmSequence(u).CountIn(a, b);
}

namespace {

// A point strictly inside (lo, hi) where u does not vanish. u has finitely
// many roots, so one of the dyadic fractions works.
Rational SplitPoint(const UniPoly& u, const Rational& lo, const Rational& hi) {
  for (int den = 2;; den *= 2) {
    for (int num = den / 2, step = 1; num > 0 && num < den;
         num += (step % 2 ? step : -step), ++step) {
      if (num % 2 == 0 && den > 2) continue;
      Rational x = lo + (hi - lo) * Frac(num, den);
      if (Sign(u(x)) != 0) return x;
    }
  }
}

}  // namespace

std::vector<IsolatingInterval> IsolateRealRoots(const UniPoly& u) {
  std::vector<IsolatingInterval> out;
  if (u.IsZero()) throw ZeroPolynomial("root isolation of the zero polynomial");
  if (u.degree() <= 0) return out;
  // Sturm counts are only valid at non-roots of a non-square-free input, so
  // work with the square-free part and keep every endpoint off its roots.
  const UniPoly sf = SquareFreePart(u);
  const SturmSequence seq(sf);
  const Rational bound = RootBound(sf);
  struct Job {
    Rational lo, hi;
    int vlo, vhi;
  };
  // Depth-first with the lower half first keeps the output ascending.
  std::vector<Job> stack;
  stack.push_back({-bound, bound, seq.VariationsAt(-bound), seq.VariationsAt(bound)});
  while (!stack.empty()) {
    Job job = std::move(stack.back());
    stack.pop_back();
    const int count = job.vlo - job.vhi;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({job.lo, job.hi});
      continue;
    }
    Rational mid = SplitPoint(sf, job.lo, job.hi);
    const int vmid = seq.VariationsAt(mid);
    stack.push_back({mid, job.hi, vmid, job.vhi});
    stack.push_back({job.lo, mid, job.vlo, vmid});
  }
  return out;
}

}  // namespace multijoint
