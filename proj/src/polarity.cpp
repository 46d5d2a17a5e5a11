#include "emtrans/polarity.hpp"

#include <algorithm>

namespace emtrans {

namespace {

void merge(VarSet& into, const VarSet& from) {
  into.insert(from.begin(), from.end());
}

}  // namespace

PolarityReport polarity(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom:
      return {{f.name()}, {}, {}};
    case Kind::Star:
    case Kind::Bot:
      return {};
    case Kind::And:
    case Kind::Or: {
      PolarityReport l = polarity(f.left());
      PolarityReport r = polarity(f.right());
      merge(l.vpos, r.vpos);
      merge(l.vneg, r.vneg);
      merge(l.vpos_ns, r.vpos_ns);
      return l;
    }
    case Kind::Imp: {
      PolarityReport l = polarity(f.left());
      PolarityReport r = polarity(f.right());
      PolarityReport out;
      out.vpos = l.vneg;
      merge(out.vpos, r.vpos);
      out.vneg = l.vpos;
      merge(out.vneg, r.vneg);
      out.vpos_ns = l.vneg;
      merge(out.vpos_ns, r.vpos_ns);
      return out;
    }
  }
  return {};
}

PolarityReport polarity(const Multiset& ms) {
  PolarityReport out;
  for (const auto& f : ms) {
    PolarityReport r = polarity(f);
    merge(out.vpos, r.vpos);
    merge(out.vneg, r.vneg);
    merge(out.vpos_ns, r.vpos_ns);
  }
  return out;
}

VarSet em_set(const Multiset& gamma, const Formula& a) {
  PolarityReport g = polarity(gamma);
  PolarityReport pa = polarity(a);
  VarSet left = g.vneg;
  merge(left, pa.vpos);
  VarSet right = g.vpos_ns;
  merge(right, pa.vneg);
  VarSet out;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::inserter(out, out.begin()));
  return out;
}

VarSet em_set_general(const Multiset& gamma, const Multiset& delta,
                      const Multiset& sigma) {
  PolarityReport g = polarity(gamma);
  PolarityReport d = polarity(delta);
  PolarityReport s = polarity(sigma);
  VarSet left = g.vneg;
  merge(left, d.vneg);
  merge(left, s.vpos);
  VarSet right = g.vpos_ns;
  merge(right, d.vpos);
  merge(right, s.vneg);
  VarSet out;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::inserter(out, out.begin()));
  return out;
}

Multiset pi_formulas(const VarSet& vars) {
  Multiset out;
  for (const auto& v : vars) {
    Formula p = Formula::atom(v);
    out.add(Formula::disj(p, Formula::neg(p)));
  }
  return out;
}

bool subset_of(const VarSet& a, const VarSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace emtrans
