#include "markov/farey.hpp"

#include <algorithm>

namespace markov {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroZero: return "ZeroZero";
    case Errc::NotNeighbors: return "NotNeighbors";
    case Errc::InvalidTriple: return "InvalidTriple";
    case Errc::InfiniteInput: return "InfiniteInput";
    case Errc::IsInitial: return "IsInitial";
    case Errc::NonUniqueDescent: return "NonUniqueDescent";
    case Errc::WrongComponent: return "WrongComponent";
    case Errc::DepthTooLarge: return "DepthTooLarge";
    case Errc::BadColumn: return "BadColumn";
    case Errc::BadShape: return "BadShape";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::Unclassifiable: return "Unclassifiable";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::Inhomogeneous: return "Inhomogeneous";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

// --- ExtRational ------------------------------------------------------------

ExtRational ExtRational::normalize(BigInt num, BigInt den) {
  if (num == 0 && den == 0) throw Error(Errc::ZeroZero, "0/0 is not an extended rational");
  BigInt g = boost::multiprecision::gcd(num, den);
  g = abs(g);
  num /= g;
  den /= g;
  if (den < 0 || (den == 0 && num < 0)) {
    num = -num;
    den = -den;
  }
  return ExtRational(std::move(num), std::move(den));
}

std::string ExtRational::str() const { return num_.str() + "/" + den_.str(); }

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt delta(const ExtRational& q, const ExtRational& q2) {
  return abs(BigInt(q.num() * q2.den() - q.den() * q2.num()));
}

namespace {

void require_neighbors(const ExtRational& q, const ExtRational& q2, const char* op) {
  if (delta(q, q2) != 1) {
    throw Error(Errc::NotNeighbors, std::string(op) + " of " + q.str() + " and " + q2.str() +
                                        " needs Delta = 1, got " + delta(q, q2).str());
  }
}

}  // namespace

ExtRational farey_sum(const ExtRational& q, const ExtRational& q2) {
  require_neighbors(q, q2, "Farey sum");
  return ExtRational::normalize(q.num() + q2.num(), q.den() + q2.den());
}

ExtRational farey_diff(const ExtRational& q, const ExtRational& q2) {
  require_neighbors(q, q2, "Farey difference");
  return ExtRational::normalize(q.num() - q2.num(), q.den() - q2.den());
}

std::string_view label(ParityClass k) {
  switch (k) {
    case ParityClass::C0: return "0";
    case ParityClass::Cm1: return "-1";
    case ParityClass::Cinf: return "inf";
  }
  return "?";
}

std::optional<ParityClass> parse_label(std::string_view text) {
  if (text == "0") return ParityClass::C0;
  if (text == "-1") return ParityClass::Cm1;
  if (text == "inf" || text == "oo") return ParityClass::Cinf;
  return std::nullopt;
}

ParityClass parity_class(const ExtRational& q) {
  if (boost::multiprecision::bit_test(q.den(), 0) == false) return ParityClass::Cinf;
  if (boost::multiprecision::bit_test(abs(q.num()), 0) == false) return ParityClass::C0;
  return ParityClass::Cm1;
}

std::pair<ExtRational, ExtRational> farey_decompose(const ExtRational& q) {
  if (q.is_infinite()) throw Error(Errc::InfiniteInput, "1/0 has no Farey decomposition");

  // Solve d*y - r*x = 1 with 0 <= y < r: y is the inverse of d modulo r.
  const BigInt& d = q.num();
  const BigInt& r = q.den();
  BigInt y = 0;
  if (r > 1) {
    // Extended Euclid on (d mod r, r).
    BigInt old_r = ((d % r) + r) % r, cur_r = r;
    BigInt old_s = 1, cur_s = 0;
    while (cur_r != 0) {
      BigInt quot = old_r / cur_r;
      BigInt tmp = old_r - quot * cur_r;
      old_r = cur_r;
      cur_r = tmp;
      tmp = old_s - quot * cur_s;
      old_s = cur_s;
      cur_s = tmp;
    }
    y = ((old_s % r) + r) % r;
  }
  const BigInt x = (d * y - 1) / r;
  ExtRational first = ExtRational::normalize(x, y);
  ExtRational second = farey_diff(q, first);
  if (second < first) std::swap(first, second);
  return {std::move(first), std::move(second)};
}

ExtRational moebius_m(const ExtRational& q) {
  return ExtRational::normalize(-q.den(), q.den() + q.num());
}

ExtRational moebius_m_inv(const ExtRational& q) {
  return ExtRational::normalize(q.num() + q.den(), -q.num());
}

MutationWord reduce_word(const MutationWord& word) {
  MutationWord out;
  for (ParityClass k : word) {
    if (!out.empty() && out.back() == k) {
      out.pop_back();
    } else {
      out.push_back(k);
    }
  }
  return out;
}

// --- FareyTriple ------------------------------------------------------------

FareyTriple FareyTriple::initial() {
  return FareyTriple({ExtRational::integer(0), ExtRational::integer(-1), ExtRational::infinity()});
}

FareyTriple FareyTriple::from_components(ExtRational a, ExtRational b, ExtRational c) {
  const std::array<const ExtRational*, 3> in{&a, &b, &c};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (delta(*in[i], *in[j]) != 1) {
        throw Error(Errc::NotNeighbors, in[i]->str() + " and " + in[j]->str() +
                                            " are not Farey neighbors (Delta = " +
                                            delta(*in[i], *in[j]).str() + ")");
      }
    }
  }
  // Pairwise Delta = 1 already forces distinct values and distinct classes;
  // the check below only guards the slotting.
  std::array<std::optional<ExtRational>, 3> slots;
  for (const ExtRational* q : in) {
    auto& s = slots[slot(parity_class(*q))];
    if (s) throw Error(Errc::InvalidTriple, "two components share a parity class");
    s = *q;
  }
  return FareyTriple({std::move(*slots[0]), std::move(*slots[1]), std::move(*slots[2])});
}

Positions FareyTriple::positions() const {
  std::array<ParityClass, 3> order = kParityClasses;
  std::sort(order.begin(), order.end(),
            [this](ParityClass x, ParityClass y) { return (*this)[x] < (*this)[y]; });
  return {order[0], order[1], order[2]};
}

bool FareyTriple::is_initial() const { return *this == initial(); }

std::string FareyTriple::str() const {
  return slots_[0].str() + "," + slots_[1].str() + "," + slots_[2].str();
}

FareyTriple mutate(const FareyTriple& t, ParityClass k) {
  const Positions pos = t.positions();
  ExtRational replacement;
  if (k == pos.first) {
    replacement = farey_sum(t[pos.second], t[pos.third]);
  } else if (k == pos.second) {
    replacement = farey_diff(t[pos.first], t[pos.third]);
  } else {
    replacement = farey_sum(t[pos.first], t[pos.second]);
  }
  std::array<ExtRational, 3> slots = t.slots_;
  slots[slot(k)] = std::move(replacement);
  return FareyTriple(std::move(slots));
}

FareyTriple apply_word(FareyTriple t, const MutationWord& word) {
  for (ParityClass k : word) t = mutate(t, k);
  return t;
}

BigInt complexity(const FareyTriple& t) {
  const ExtRational& s = t.middle();
  return abs(s.num()) + s.den();
}

ParityClass descent_direction(const FareyTriple& t) {
  if (t.is_initial()) throw Error(Errc::IsInitial, "the initial triple has no descent direction");
  const BigInt here = complexity(t);
  std::optional<ParityClass> found;
  int hits = 0;
  for (ParityClass k : kParityClasses) {
    if (complexity(mutate(t, k)) < here) {
      found = k;
      ++hits;
    }
  }
  if (hits != 1) {
    throw Error(Errc::NonUniqueDescent, "triple " + t.str() + " has " + std::to_string(hits) +
                                            " complexity-decreasing directions");
  }
  return *found;
}

MutationWord path_to_initial(const FareyTriple& t) {
  MutationWord word;
  FareyTriple cur = t;
  while (!cur.is_initial()) {
    const ParityClass k = descent_direction(cur);
    word.push_back(k);
    cur = mutate(cur, k);
  }
  return word;
}

Component component(const FareyTriple& t) {
  if (t.is_initial()) return Component::Root;
  switch (path_to_initial(t).back()) {
    case ParityClass::C0: return Component::T0;
    case ParityClass::Cm1: return Component::Tm1;
    case ParityClass::Cinf: return Component::Tinf;
  }
  return Component::Root;
}

std::string_view to_string(Component c) {
  switch (c) {
    case Component::Root: return "root";
    case Component::T0: return "0";
    case Component::Tm1: return "-1";
    case Component::Tinf: return "inf";
  }
  return "?";
}

namespace {

void require_component(const FareyTriple& t, Component expected, const char* map) {
  const Component actual = component(t);
  if (actual != expected) {
    throw Error(Errc::WrongComponent, std::string(map) + " needs a triple in component " +
                                          std::string(to_string(expected)) + ", but " + t.str() +
                                          " lies in " + std::string(to_string(actual)));
  }
}

}  // namespace

FareyTriple phi(const FareyTriple& t) {
  require_component(t, Component::Tm1, "phi");
  return FareyTriple::from_components(moebius_m(t.qinf()), moebius_m(t.q0()), moebius_m(t.qm1()));
}

FareyTriple psi(const FareyTriple& t) {
  require_component(t, Component::Tm1, "psi");
  return FareyTriple::from_components(moebius_m_inv(t.qm1()), moebius_m_inv(t.qinf()),
                                      moebius_m_inv(t.q0()));
}

FareyTriple phi_inv(const FareyTriple& t) {
  require_component(t, Component::Tinf, "phi_inv");
  return FareyTriple::from_components(moebius_m_inv(t.qm1()), moebius_m_inv(t.qinf()),
                                      moebius_m_inv(t.q0()));
}

FareyTriple psi_inv(const FareyTriple& t) {
  require_component(t, Component::T0, "psi_inv");
  return FareyTriple::from_components(moebius_m(t.qinf()), moebius_m(t.q0()), moebius_m(t.qm1()));
}

std::vector<EnumeratedTriple> enumerate(unsigned depth, unsigned cap) {
  if (depth > cap) {
    throw Error(Errc::DepthTooLarge,
                "depth " + std::to_string(depth) + " exceeds the cap " + std::to_string(cap));
  }
  std::vector<EnumeratedTriple> out;
  out.reserve(1 + 3 * ((std::size_t{1} << depth) - 1));
  out.push_back({FareyTriple::initial(), {}});
  // Children of entry i are appended after all of level(i); never re-apply
  // the letter that produced a vertex.
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].word.size() == depth) continue;
    for (ParityClass k : kParityClasses) {
      if (!out[i].word.empty() && out[i].word.back() == k) continue;
      MutationWord word = out[i].word;
      word.push_back(k);
      FareyTriple next = mutate(out[i].triple, k);
      out.push_back({std::move(next), std::move(word)});
    }
  }
  return out;
}

}  // namespace markov
