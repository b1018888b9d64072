#include "setlab/family_algebra.hpp"

#include <bit>

namespace setlab {

namespace {

std::size_t word_count(unsigned n) { return n <= 6 ? 1 : (std::size_t{1} << n) / 64; }

void require_same_ground(const FiniteFamily& f, const FiniteFamily& g) {
  if (f.ground_size() != g.ground_size()) throw Error("families live on different ground sets");
}

}  // namespace

FiniteFamily::FiniteFamily(unsigned ground_size) : n_(ground_size), bits_(word_count(ground_size), 0) {
  if (ground_size > kMaxGroundSize) throw Error("ground set size exceeds 16");
}

FiniteFamily FiniteFamily::power_set(unsigned n) {
  FiniteFamily f(n);
  for (Subset a = 0; a < f.subset_count(); ++a) f.insert(a);
  return f;
}

FiniteFamily FiniteFamily::principal(unsigned n, Subset a) {
  FiniteFamily f(n);
  if (a > f.full_subset()) throw Error("subset outside the ground set");
  for (Subset b = 0; b < f.subset_count(); ++b) {
    if ((b & a) == a) f.insert(b);
  }
  return f;
}

FiniteFamily FiniteFamily::delta(unsigned n, unsigned k) {
  if (k == 0 || k > n) throw Error("delta index outside the ground set");
  return principal(n, Subset{1} << (k - 1));
}

FiniteFamily FiniteFamily::from_word(unsigned n, std::uint64_t bits) {
  if (n > 6) throw Error("single-word families need a ground set of size at most 6");
  FiniteFamily f(n);
  std::size_t count = std::size_t{1} << n;
  f.bits_[0] = count == 64 ? bits : bits & ((std::uint64_t{1} << count) - 1);
  return f;
}

void FiniteFamily::insert(Subset a) {
  if (a > full_subset()) throw Error("subset outside the ground set");
  bits_[a >> 6] |= std::uint64_t{1} << (a & 63);
}

void FiniteFamily::erase(Subset a) {
  if (a > full_subset()) return;
  bits_[a >> 6] &= ~(std::uint64_t{1} << (a & 63));
}

std::size_t FiniteFamily::size() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool FiniteFamily::empty() const {
  for (auto w : bits_) {
    if (w) return false;
  }
  return true;
}

std::vector<Subset> FiniteFamily::members() const {
  std::vector<Subset> out;
  for (Subset a = 0; a < subset_count(); ++a) {
    if (contains(a)) out.push_back(a);
  }
  return out;
}

std::vector<Subset> FiniteFamily::minimal_members() const {
  std::vector<Subset> out;
  for (Subset a = 0; a < subset_count(); ++a) {
    if (!contains(a)) continue;
    bool minimal = true;
    for (Subset rest = a; rest && minimal; rest &= rest - 1) {
      if (contains(a & ~(rest & -rest))) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

bool FiniteFamily::is_upward_closed() const {
  Subset full = full_subset();
  for (Subset a = 0; a < subset_count(); ++a) {
    if (!contains(a)) continue;
    for (Subset rest = full & ~a; rest; rest &= rest - 1) {
      if (!contains(a | (rest & -rest))) return false;
    }
  }
  return true;
}

bool is_subfamily(const FiniteFamily& f, const FiniteFamily& g) {
  require_same_ground(f, g);
  for (std::size_t i = 0; i < f.words().size(); ++i) {
    if (f.words()[i] & ~g.words()[i]) return false;
  }
  return true;
}

FiniteFamily upward_closure(unsigned n, const std::vector<Subset>& generators) {
  FiniteFamily f(n);
  for (Subset a : generators) f.insert(a);
  for (unsigned bit = 0; bit < n; ++bit) {
    Subset b = Subset{1} << bit;
    for (Subset a = 0; a < f.subset_count(); ++a) {
      if (!(a & b) && f.contains(a)) f.insert(a | b);
    }
  }
  return f;
}

FiniteFamily dual(const FiniteFamily& f) {
  // For upward-closed F, B meets every member iff its complement is not a member.
  FiniteFamily out(f.ground_size());
  Subset full = f.full_subset();
  for (Subset b = 0; b < f.subset_count(); ++b) {
    if (!f.contains(full & ~b)) out.insert(b);
  }
  return out;
}

FiniteFamily meet(const FiniteFamily& f, const FiniteFamily& g) {
  require_same_ground(f, g);
  if (f.empty()) return g;
  if (g.empty()) return f;
  // C = A ∩ B for members A ⊇ C, B ⊇ C iff the complement of C splits into P, Q with
  // C ∪ P in F and C ∪ Q in G (both families being upward closed).
  FiniteFamily out(f.ground_size());
  Subset full = f.full_subset();
  for (Subset c = 0; c < f.subset_count(); ++c) {
    Subset rest = full & ~c;
    for (Subset p = rest;; p = (p - 1) & rest) {
      if (f.contains(c | p) && g.contains(c | (rest & ~p))) {
        out.insert(c);
        break;
      }
      if (p == 0) break;
    }
  }
  return out;
}

Subset translate_subset(Subset a, unsigned n) { return n >= 32 ? 0 : a >> n; }

Subset translate_set_by_family(Subset a, const FiniteFamily& f) {
  Subset out = 0;
  for (unsigned n = 1; n < f.ground_size(); ++n) {
    if (f.contains(translate_subset(a, n))) out |= Subset{1} << (n - 1);
  }
  return out;
}

FiniteFamily sum(const FiniteFamily& f, const FiniteFamily& g) {
  require_same_ground(f, g);
  FiniteFamily out(f.ground_size());
  for (Subset b = 0; b < f.subset_count(); ++b) {
    if (f.contains(translate_set_by_family(b, g))) out.insert(b);
  }
  return out;
}

FiniteFamily family_translate(const FiniteFamily& f, unsigned m) {
  FiniteFamily out(f.ground_size());
  for (Subset b = 0; b < f.subset_count(); ++b) {
    if (f.contains(b)) out.insert(translate_subset(b, m));
  }
  return out;
}

bool is_proper(const FiniteFamily& f) { return !f.empty() && !f.contains(0); }

bool is_filter(const FiniteFamily& f) {
  if (f.is_upward_closed()) {
    // a finite filter is the upward closure of the intersection of its members
    Subset core = f.full_subset();
    bool any = false;
    for (Subset a = 0; a < f.subset_count(); ++a) {
      if (f.contains(a)) core &= a, any = true;
    }
    return !any || f.contains(core);
  }
  auto m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!f.contains(m[i] & m[j])) return false;
    }
  }
  return true;
}

bool is_partition_regular(const FiniteFamily& f) {
  for (Subset a = 0; a < f.subset_count(); ++a) {
    if (!f.contains(a)) continue;
    for (Subset p = a;; p = (p - 1) & a) {
      if (!f.contains(p) && !f.contains(a & ~p)) return false;
      if (p == 0) break;
    }
  }
  return true;
}

bool is_idempotent(const FiniteFamily& f) { return is_subfamily(f, sum(f, f)); }

bool is_translation_invariant(const FiniteFamily& f) {
  for (Subset b = 0; b < f.subset_count(); ++b) {
    if (!f.contains(b)) continue;
    for (unsigned n = 1; n < f.ground_size(); ++n) {
      if (!f.contains(translate_subset(b, n))) return false;
    }
  }
  return true;
}

bool is_ultrafilter(const FiniteFamily& f) { return is_proper(f) && is_filter(f) && f == dual(f); }

bool is_maximal_proper_filter(const FiniteFamily& f) {
  if (!is_proper(f) || !is_filter(f)) return false;
  // Adding S keeps the generated filter proper iff S meets every member of F.
  for (Subset s = 1; s < f.subset_count(); ++s) {
    if (f.contains(s)) continue;
    bool meets_all = true;
    for (Subset a = 0; a < f.subset_count() && meets_all; ++a) {
      if (f.contains(a) && (a & s) == 0) meets_all = false;
    }
    if (meets_all) return false;
  }
  return true;
}

FamilyFlags classify_family(const FiniteFamily& f) {
  return {is_filter(f), is_partition_regular(f), is_idempotent(f), is_translation_invariant(f), is_ultrafilter(f)};
}

SearchResult extract_fs_chain(const FiniteFamily& f, Subset a, std::size_t k) {
  if (!is_proper(f) || !is_filter(f)) throw Error("family must be a proper filter");
  if (!f.contains(a)) throw Error("set is not a member of the family");
  if (k == 0) return {SearchStatus::Found, {}};
  std::vector<std::size_t> chain;
  Subset current = a;
  while (chain.size() < k) {
    Subset candidates = current & translate_set_by_family(current, f);
    if (candidates == 0) break;
    auto x = static_cast<unsigned>(std::countr_zero(candidates)) + 1;
    chain.push_back(x);
    current &= translate_subset(current, x);
  }
  if (chain.empty()) return {};
  return {SearchStatus::Found, chain};
}

std::vector<FiniteFamily> all_upward_closed_families(unsigned n) {
  if (n > 4) throw Error("exhaustive enumeration is limited to ground sets of size at most 4");
  std::vector<FiniteFamily> out;
  std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    auto f = FiniteFamily::from_word(n, bits);
    if (f.is_upward_closed()) out.push_back(f);
  }
  return out;
}

std::string subset_str(Subset a) {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; a >> i; ++i) {
    if (!((a >> i) & 1)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string family_str(const FiniteFamily& f) {
  if (f.empty()) return "empty";
  std::string out = "up{";
  bool first = true;
  for (Subset a : f.minimal_members()) {
    if (!first) out += ",";
    out += subset_str(a);
    first = false;
  }
  return out + "}";
}

}  // namespace setlab
