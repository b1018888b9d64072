#include "setlab/family_lab.hpp"

#include <random>
#include <sstream>
#include <unordered_map>

#include "setlab/family_algebra.hpp"

namespace setlab {

namespace {

using Word = std::uint64_t;

bool has(Word w, Subset a) { return (w >> a) & 1; }
bool within(Word f, Word g) { return (f & ~g) == 0; }

// A - F for a family held in one word.
Subset tdf(Subset a, Word w, unsigned n) {
  Subset out = 0;
  for (unsigned k = 1; k < n; ++k) {
    if (has(w, a >> k)) out |= Subset{1} << (k - 1);
  }
  return out;
}

Word sum_w(unsigned n, Word f, Word g) {
  Word out = 0;
  for (Subset b = 0; b < (Subset{1} << n); ++b) {
    if (has(f, tdf(b, g, n))) out |= Word{1} << b;
  }
  return out;
}

struct Fam {
  Word w = 0;
  long idx = -1;  // position in the universe, -1 when outside
};

class Lab {
 public:
  Lab(unsigned n, std::vector<Word> families) : n_(n), s_(families.size()), fam_(std::move(families)) {
    for (std::size_t i = 0; i < s_; ++i) index_[fam_[i]] = static_cast<long>(i);
    dual_.resize(s_);
    meet_.resize(s_ * s_);
    sum_.resize(s_ * s_);
    for (std::size_t i = 0; i < s_; ++i) {
      auto f = ff(fam_[i]);
      dual_[i] = dual(f).word();
      proper_.push_back(is_proper(f));
      filter_.push_back(is_filter(f));
      pr_.push_back(is_partition_regular(f));
      idem_.push_back(is_idempotent(f));
      ti_.push_back(is_translation_invariant(f));
      for (std::size_t j = 0; j < s_; ++j) {
        auto g = ff(fam_[j]);
        meet_[i * s_ + j] = meet(f, g).word();
        sum_[i * s_ + j] = sum(f, g).word();
      }
    }
    closed_ = true;
    for (std::size_t i = 0; i < s_ && closed_; ++i) {
      closed_ = index_.count(dual_[i]) > 0;
      for (std::size_t j = 0; j < s_ && closed_; ++j) {
        closed_ = index_.count(meet_[i * s_ + j]) && index_.count(sum_[i * s_ + j]);
      }
    }
  }

  unsigned n() const { return n_; }
  std::size_t size() const { return s_; }
  Subset subsets() const { return Subset{1} << n_; }
  Subset full() const { return subsets() - 1; }
  bool closed() const { return closed_; }

  FiniteFamily ff(Word w) const { return FiniteFamily::from_word(n_, w); }
  Fam at(Word w) const {
    auto it = index_.find(w);
    return {w, it == index_.end() ? -1 : it->second};
  }
  Fam member(std::size_t i) const { return {fam_[i], static_cast<long>(i)}; }
  std::string str(Word w) const { return family_str(ff(w)); }

  Word dual_of(Fam f) const { return f.idx >= 0 ? dual_[f.idx] : dual(ff(f.w)).word(); }
  Word meet_of(Fam f, Fam g) const {
    return f.idx >= 0 && g.idx >= 0 ? meet_[f.idx * s_ + g.idx] : meet(ff(f.w), ff(g.w)).word();
  }
  Word sum_of(Fam f, Fam g) const {
    return f.idx >= 0 && g.idx >= 0 ? sum_[f.idx * s_ + g.idx] : sum_w(n_, f.w, g.w);
  }
  Subset tdf_of(Subset a, Word w) const { return tdf(a, w, n_); }

  bool proper(std::size_t i) const { return proper_[i]; }
  bool filter(std::size_t i) const { return filter_[i]; }
  bool pr(std::size_t i) const { return pr_[i]; }
  bool idem(std::size_t i) const { return idem_[i]; }
  bool ti(std::size_t i) const { return ti_[i]; }
  Word word(std::size_t i) const { return fam_[i]; }
  Word meet_word(std::size_t i, std::size_t j) const { return meet_[i * s_ + j]; }
  Word sum_word(std::size_t i, std::size_t j) const { return sum_[i * s_ + j]; }

 private:
  unsigned n_;
  std::size_t s_;
  std::vector<Word> fam_;
  std::unordered_map<Word, long> index_;
  std::vector<Word> dual_, meet_, sum_;
  std::vector<char> proper_, filter_, pr_, idem_, ti_;
  bool closed_ = false;
};

class Recorder {
 public:
  explicit Recorder(std::vector<IdentityTally>& out) : out_(out) {}

  IdentityTally& open(const std::string& name, const std::string& statement) {
    out_.push_back({name, statement, 0, 0, {}});
    return out_.back();
  }

 private:
  std::vector<IdentityTally>& out_;
};

template <class Describe>
void record(IdentityTally& t, bool ok, Describe&& describe) {
  ++t.instances;
  if (ok) return;
  if (t.violations == 0) t.first_violation = describe();
  ++t.violations;
}

// Pairs (F, G) with F ⊆ G used by the monotonicity identities.
using Comparable = std::vector<std::pair<Fam, Fam>>;

Comparable comparable_pairs(const Lab& lab, bool exhaustive) {
  Comparable out;
  for (std::size_t i = 0; i < lab.size(); ++i) {
    for (std::size_t j = 0; j < lab.size(); ++j) {
      if (within(lab.word(i), lab.word(j))) {
        out.emplace_back(lab.member(i), lab.member(j));
      } else if (!exhaustive) {
        // F ⊆ F ⊓ X always
        out.emplace_back(lab.member(i), lab.at(lab.meet_word(i, j)));
      }
    }
  }
  return out;
}

void unary_facts(const Lab& lab, Recorder& rec) {
  const unsigned n = lab.n();
  auto& double_dual = rec.open("double_dual", "F** = F");
  auto& extremes = rec.open("dual_extremes", "the empty family and the power set are dual");
  auto& proper_dual = rec.open("dual_of_proper_is_proper", "F proper => F* proper");
  auto& complement = rec.open("member_iff_complement_outside_dual", "A in F <=> complement(A) not in F*");
  auto& meet_dual_proper = rec.open("meet_with_dual_is_proper", "F proper => F meet F* proper");
  auto& pr_dual = rec.open("pr_iff_dual_is_filter", "F partition regular <=> F* filter");
  auto& filter_inside = rec.open("proper_filter_inside_dual", "F proper filter => F subset of F*");
  auto& cap_pr = rec.open("cap_with_dual_is_pr", "G = F meet F* is partition regular");
  auto& cap_filter = rec.open("dual_of_cap_with_dual_is_filter", "G* is a filter for G = F meet F*");
  auto& cap_members =
      rec.open("cap_dual_membership", "A in G* <=> A cap B stays in F, F*, G, G* for every B there");
  auto& max_pr = rec.open("maximal_filter_iff_pr_filter", "F proper: maximal proper filter <=> PR filter");
  auto& pr_self = rec.open("pr_filter_implies_self_dual", "F proper PR filter => F = F*");
  auto& self_pr = rec.open("self_dual_implies_pr_filter", "F proper and F = F* => F is a PR filter");
  auto& idem_def =
      rec.open("idempotent_iff_translates_in_family", "F subset of F+F <=> A - F in F for every A in F");
  auto& ti_sum = rec.open("translation_invariant_iff_sum_with_ground",
                          "F - n subset of F for all n <=> F subset of {ground} + F");
  auto& ti_idem = rec.open("translation_invariant_implies_idempotent", "F translation invariant => F idempotent");

  const Word empty = 0;
  const Word power = FiniteFamily::power_set(n).word();
  record(extremes, lab.dual_of(lab.at(empty)) == power && lab.dual_of(lab.at(power)) == empty,
         [] { return std::string("dual(empty) or dual(power set) wrong"); });
  const Word ground = FiniteFamily::principal(n, lab.full()).word();

  for (std::size_t i = 0; i < lab.size(); ++i) {
    const Fam f = lab.member(i);
    const Word fd = lab.dual_of(f);
    const auto fs = [&] { return "F=" + lab.str(f.w); };
    record(double_dual, lab.dual_of(lab.at(fd)) == f.w, fs);
    if (lab.proper(i)) {
      record(proper_dual, is_proper(lab.ff(fd)), fs);
      record(meet_dual_proper, is_proper(lab.ff(lab.meet_of(f, lab.at(fd)))), fs);
    }
    for (Subset a = 0; a < lab.subsets(); ++a) {
      record(complement, has(f.w, a) == !has(fd, lab.full() & ~a),
             [&] { return fs() + " A=" + subset_str(a); });
    }
    record(pr_dual, lab.pr(i) == is_filter(lab.ff(fd)), fs);
    if (lab.proper(i) && lab.filter(i)) record(filter_inside, within(f.w, fd), fs);

    const Word g = lab.meet_of(f, lab.at(fd));
    const Word gd = lab.dual_of(lab.at(g));
    record(cap_pr, is_partition_regular(lab.ff(g)), fs);
    record(cap_filter, is_filter(lab.ff(gd)), fs);
    for (Subset a = 0; a < lab.subsets(); ++a) {
      auto stays = [&](Word fam) {
        for (Subset b = 0; b < lab.subsets(); ++b) {
          if (has(fam, b) && !has(fam, a & b)) return false;
        }
        return true;
      };
      bool in = has(gd, a);
      record(cap_members, stays(f.w) == in && stays(fd) == in && stays(g) == in && stays(gd) == in,
             [&] { return fs() + " A=" + subset_str(a); });
    }
    if (lab.proper(i)) {
      bool maximal = is_maximal_proper_filter(lab.ff(f.w));
      bool self_dual = f.w == fd;
      bool pr_filter = lab.pr(i) && lab.filter(i);
      record(max_pr, maximal == pr_filter, fs);
      if (pr_filter) record(pr_self, self_dual, fs);
      if (self_dual) record(self_pr, pr_filter, fs);
    }
    bool translates_in = true;
    for (Subset a = 0; a < lab.subsets(); ++a) {
      if (has(f.w, a) && !has(f.w, lab.tdf_of(a, f.w))) translates_in = false;
    }
    record(idem_def, lab.idem(i) == translates_in, fs);
    record(ti_sum, lab.ti(i) == within(f.w, lab.sum_of(lab.at(ground), f)), fs);
    if (lab.ti(i)) record(ti_idem, lab.idem(i), fs);
  }
}

void pair_facts(const Lab& lab, Recorder& rec) {
  const unsigned n = lab.n();
  auto& dual_rev = rec.open("dual_reverses_inclusion", "F subset of G <=> G* subset of F*");
  auto& meet_both = rec.open("meet_contains_both", "F meet G is a family containing F and G");
  auto& least = rec.open("meet_of_filters_is_least_filter",
                         "F, G filters => F meet G is the smallest filter containing both");
  auto& proper_sum = rec.open("sum_of_proper_is_proper", "F, G proper => F + G proper");
  auto& tmc = rec.open("translate_meet_containment", "(A - F) cap (B - G) subset of (A cap B) - (F meet G)");
  auto& tme = rec.open("translate_meet_equality", "(A - F) cap (B - F) = (A cap B) - (F meet F)");
  auto& tie = rec.open("translate_intersection_equality", "(A - F) cap (B - F) = (A cap B) - F");
  auto& filter_sum = rec.open("sum_preserves_filter", "F filter => F + G filter");
  auto& shift = rec.open("shift_commutes_with_family_translate", "(A - n) - F = (A - F) - n");
  auto& by_sum = rec.open("translate_by_sum", "A - (F + G) = (A - G) - F");
  auto& sum_family = rec.open("sum_is_family", "F + G is upward closed");
  auto& dual_sum = rec.open("dual_of_sum", "(F + G)* = F* + G*");
  auto& meet_idem = rec.open("meet_preserves_idempotent", "F, G idempotent => F meet G idempotent");
  auto& meet_ti = rec.open("meet_preserves_translation_invariance",
                           "F, G translation invariant => F meet G translation invariant");
  auto& deltas = rec.open("delta_sums", "delta_i + delta_j = delta_(i+j)");

  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; i + j <= n; ++j) {
      auto di = FiniteFamily::delta(n, i), dj = FiniteFamily::delta(n, j);
      record(deltas, sum(di, dj) == FiniteFamily::delta(n, i + j),
             [&] { return "i=" + std::to_string(i) + " j=" + std::to_string(j); });
    }
  }

  for (std::size_t i = 0; i < lab.size(); ++i) {
    const Fam f = lab.member(i);
    const Word fd = lab.dual_of(f);
    // (A ∩ B) - F for every A, B, and single translates of F
    std::vector<Subset> tf(lab.subsets());
    for (Subset a = 0; a < lab.subsets(); ++a) tf[a] = lab.tdf_of(a, f.w);
    const Word ff_meet = lab.meet_of(f, f);
    for (Subset a = 0; a < lab.subsets(); ++a) {
      for (Subset b = 0; b < lab.subsets(); ++b) {
        auto desc = [&] { return "F=" + lab.str(f.w) + " A=" + subset_str(a) + " B=" + subset_str(b); };
        record(tme, (tf[a] & tf[b]) == lab.tdf_of(a & b, ff_meet), desc);
        record(tie, (tf[a] & tf[b]) == tf[a & b], desc);
      }
      for (unsigned k = 1; k < n; ++k) {
        record(shift, lab.tdf_of(translate_subset(a, k), f.w) == translate_subset(tf[a], k), [&] {
          return "F=" + lab.str(f.w) + " A=" + subset_str(a) + " n=" + std::to_string(k);
        });
      }
    }

    for (std::size_t j = 0; j < lab.size(); ++j) {
      const Fam g = lab.member(j);
      const Word gd = lab.dual_of(g);
      const auto fg = [&] { return "F=" + lab.str(f.w) + " G=" + lab.str(g.w); };
      record(dual_rev, within(f.w, g.w) == within(gd, fd), fg);
      const Word m = lab.meet_word(i, j);
      record(meet_both, lab.ff(m).is_upward_closed() && within(f.w, m) && within(g.w, m), fg);
      if (lab.filter(i) && lab.filter(j)) {
        bool ok = is_filter(lab.ff(m)) && within(f.w, m) && within(g.w, m);
        for (std::size_t h = 0; h < lab.size() && ok; ++h) {
          if (lab.filter(h) && within(f.w, lab.word(h)) && within(g.w, lab.word(h))) ok = within(m, lab.word(h));
        }
        record(least, ok, fg);
      }
      const Word s = lab.sum_word(i, j);
      if (lab.proper(i) && lab.proper(j)) record(proper_sum, is_proper(lab.ff(s)), fg);
      if (lab.filter(i)) record(filter_sum, is_filter(lab.ff(s)), fg);
      record(sum_family, lab.ff(s).is_upward_closed(), fg);
      record(dual_sum, lab.dual_of(lab.at(s)) == lab.sum_of(lab.at(fd), lab.at(gd)), fg);
      if (lab.idem(i) && lab.idem(j)) record(meet_idem, is_idempotent(lab.ff(m)), fg);
      if (lab.ti(i) && lab.ti(j)) record(meet_ti, is_translation_invariant(lab.ff(m)), fg);

      std::vector<Subset> tm(lab.subsets());
      for (Subset c = 0; c < lab.subsets(); ++c) tm[c] = lab.tdf_of(c, m);
      for (Subset a = 0; a < lab.subsets(); ++a) {
        const Subset ag = lab.tdf_of(a, g.w);
        record(by_sum, lab.tdf_of(a, s) == lab.tdf_of(ag, f.w),
               [&] { return fg() + " A=" + subset_str(a); });
        for (Subset b = 0; b < lab.subsets(); ++b) {
          record(tmc, within(tf[a] & lab.tdf_of(b, g.w), tm[a & b]),
                 [&] { return fg() + " A=" + subset_str(a) + " B=" + subset_str(b); });
        }
      }
    }
  }
}

void comparable_facts(const Lab& lab, const Comparable& pairs, bool exhaustive, std::size_t draws,
                      std::mt19937_64& rng, Recorder& rec) {
  auto& meet_mono = rec.open("meet_monotone", "F1 subset of G1, F2 subset of G2 => F1 meet F2 subset of G1 meet G2");
  auto& tr_mono = rec.open("translate_monotone", "F subset of G => A - F subset of A - G");
  auto& sum_mono = rec.open("sum_monotone", "F1 subset of G1, F2 subset of G2 => F1 + F2 subset of G1 + G2");

  for (const auto& [f, g] : pairs) {
    for (Subset a = 0; a < lab.subsets(); ++a) {
      record(tr_mono, within(lab.tdf_of(a, f.w), lab.tdf_of(a, g.w)),
             [&] { return "F=" + lab.str(f.w) + " G=" + lab.str(g.w) + " A=" + subset_str(a); });
    }
  }
  auto check = [&](const std::pair<Fam, Fam>& p1, const std::pair<Fam, Fam>& p2) {
    auto desc = [&] {
      return "F1=" + lab.str(p1.first.w) + " G1=" + lab.str(p1.second.w) + " F2=" + lab.str(p2.first.w) +
             " G2=" + lab.str(p2.second.w);
    };
    record(sum_mono, within(lab.sum_of(p1.first, p2.first), lab.sum_of(p1.second, p2.second)), desc);
    record(meet_mono, within(lab.meet_of(p1.first, p2.first), lab.meet_of(p1.second, p2.second)), desc);
  };
  if (exhaustive) {
    for (const auto& p1 : pairs) {
      for (const auto& p2 : pairs) check(p1, p2);
    }
  } else {
    for (std::size_t d = 0; d < draws; ++d) {
      const auto& p1 = pairs[rng() % pairs.size()];
      const auto& p2 = pairs[rng() % pairs.size()];
      check(p1, p2);
    }
  }
}

void meet_of_sums(const Lab& lab, bool exhaustive, std::size_t draws, std::mt19937_64& rng, Recorder& rec) {
  auto& t = rec.open("meet_of_sums", "(F1 + F2) meet (G1 + G2) subset of (F1 meet G1) + (F2 meet G2)");
  auto desc = [&](Word f1, Word f2, Word g1, Word g2) {
    return "F1=" + lab.str(f1) + " F2=" + lab.str(f2) + " G1=" + lab.str(g1) + " G2=" + lab.str(g2);
  };
  if (exhaustive && lab.closed() && lab.size() <= 65535) {
    // Index tables keep the full four-fold sweep cheap.
    const std::size_t s = lab.size();
    std::vector<std::uint16_t> mi(s * s), si(s * s);
    std::vector<Word> w(s);
    for (std::size_t i = 0; i < s; ++i) {
      w[i] = lab.word(i);
      for (std::size_t j = 0; j < s; ++j) {
        mi[i * s + j] = static_cast<std::uint16_t>(lab.at(lab.meet_word(i, j)).idx);
        si[i * s + j] = static_cast<std::uint16_t>(lab.at(lab.sum_word(i, j)).idx);
      }
    }
    for (std::size_t f1 = 0; f1 < s; ++f1) {
      for (std::size_t g1 = 0; g1 < s; ++g1) {
        const std::size_t m1 = mi[f1 * s + g1];
        for (std::size_t f2 = 0; f2 < s; ++f2) {
          const std::size_t s1 = si[f1 * s + f2];
          for (std::size_t g2 = 0; g2 < s; ++g2) {
            const std::size_t lhs = mi[s1 * s + si[g1 * s + g2]];
            const std::size_t rhs = si[m1 * s + mi[f2 * s + g2]];
            ++t.instances;
            if (!within(w[lhs], w[rhs])) {
              if (t.violations == 0) t.first_violation = desc(w[f1], w[f2], w[g1], w[g2]);
              ++t.violations;
            }
          }
        }
      }
    }
    return;
  }
  for (std::size_t d = 0; d < draws; ++d) {
    Fam f1 = lab.member(rng() % lab.size()), f2 = lab.member(rng() % lab.size());
    Fam g1 = lab.member(rng() % lab.size()), g2 = lab.member(rng() % lab.size());
    Word lhs = lab.meet_of(lab.at(lab.sum_of(f1, f2)), lab.at(lab.sum_of(g1, g2)));
    Word rhs = lab.sum_of(lab.at(lab.meet_of(f1, g1)), lab.at(lab.meet_of(f2, g2)));
    record(t, within(lhs, rhs), [&] { return desc(f1.w, f2.w, g1.w, g2.w); });
  }
}

LabReport run(const Lab& lab, bool exhaustive, std::size_t draws, std::uint64_t seed) {
  LabReport report;
  report.ground_size = lab.n();
  report.mode = exhaustive ? "exhaustive" : "sampled";
  report.families = lab.size();
  report.seed = exhaustive ? 0 : seed;
  Recorder rec(report.identities);
  // reserve so references handed out by open() stay valid
  report.identities.reserve(64);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  unary_facts(lab, rec);
  pair_facts(lab, rec);
  comparable_facts(lab, comparable_pairs(lab, exhaustive), exhaustive, draws, rng, rec);
  meet_of_sums(lab, exhaustive, draws, rng, rec);
  return report;
}

}  // namespace

const IdentityTally* LabReport::find(const std::string& name) const {
  for (const auto& t : identities) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

LabReport run_exhaustive_lab(unsigned n) {
  std::vector<Word> words;
  for (const auto& f : all_upward_closed_families(n)) words.push_back(f.word());
  Lab lab(n, std::move(words));
  return run(lab, true, 0, 0);
}

LabReport run_sampled_lab(unsigned n, std::size_t samples, std::size_t quads, std::uint64_t seed) {
  if (n == 0 || n > 6) throw Error("sampled lab needs a ground set of size 1..6");
  std::mt19937_64 rng(seed);
  std::vector<Word> words;
  std::unordered_map<Word, bool> seen;
  auto add = [&](Word w) {
    if (seen.emplace(w, true).second) words.push_back(w);
  };
  add(0);
  add(FiniteFamily::power_set(n).word());
  for (unsigned k = 1; k <= n; ++k) add(FiniteFamily::delta(n, k).word());
  const Subset full = (Subset{1} << n) - 1;
  add(FiniteFamily::principal(n, full).word());
  std::size_t target = words.size() + samples;
  for (std::size_t guard = 0; words.size() < target && guard < 100 * (samples + 1); ++guard) {
    std::vector<Subset> gens(1 + rng() % 4);
    for (auto& g : gens) g = static_cast<Subset>(rng()) & full;
    add(upward_closure(n, gens).word());
  }
  Lab lab(n, std::move(words));
  return run(lab, false, quads, seed);
}

std::string lab_transcript(const LabReport& report) {
  std::ostringstream os;
  os << "ground_size " << report.ground_size << "\n";
  os << "mode " << report.mode << "\n";
  os << "families " << report.families << "\n";
  if (report.mode == "sampled") os << "seed " << report.seed << "\n";
  for (const auto& t : report.identities) {
    os << t.name << " instances=" << t.instances << " violations=" << t.violations << "\n";
    if (!t.holds()) os << "  first " << t.first_violation << "\n";
  }
  return os.str();
}

}  // namespace setlab
