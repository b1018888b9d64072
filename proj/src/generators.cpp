#include "setlab/generators.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace setlab {

namespace {

using i128 = __int128;

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed rational '" + std::string(s) + "'");
  }
  return v;
}

std::int64_t checked(i128 v) {
  if (v > i128{INT64_MAX} || v < i128{INT64_MIN}) throw Error("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

// floor division for a positive divisor
i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b) != 0 && a < 0) --q;
  return q;
}

i128 floor_mod(i128 a, i128 b) { return a - floor_div(a, b) * b; }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  numerator = n / g;
  denominator = d / g;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text), 1);
  std::int64_t d = parse_int(std::string_view(text).substr(slash + 1));
  if (d == 0) throw ParseError("rational with zero denominator");
  return Rational(parse_int(std::string_view(text).substr(0, slash)), d);
}

std::string Rational::str() const {
  if (denominator == 1) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

bool operator<(const Rational& a, const Rational& b) {
  return i128{a.numerator} * b.denominator < i128{b.numerator} * a.denominator;
}

Rational frac(const Rational& r) {
  return Rational(checked(floor_mod(r.numerator, r.denominator)), r.denominator);
}

std::string variant_name(const GeneratorVariant& v) {
  static const char* names[] = {"RotationReturns", "Beatty",       "EvenNu2", "Chacon",
                                "DyadicBlocks",    "ResidueThickUnion", "FsSet", "ThickSchedule"};
  return names[v.index()];
}

std::string chacon_word(std::size_t length) {
  std::string w = "0";
  while (w.size() < length) {
    std::string next;
    next.reserve(w.size() * 4);
    for (char c : w) next += (c == '0') ? "0010" : "1";
    w = std::move(next);
  }
  w.resize(length);
  return w;
}

DyadicBlocks two_block_parity_preset() { return DyadicBlocks{2, {0, 1}}; }

namespace {

void require_precision(const Rational& alpha, std::size_t horizon) {
  i128 need = i128{static_cast<std::int64_t>(horizon)} * static_cast<std::int64_t>(horizon);
  if (i128{alpha.denominator} < need) {
    throw Error("insufficient precision: denominator " + std::to_string(alpha.denominator) +
                " is below horizon^2 = " + std::to_string(static_cast<std::int64_t>(need)));
  }
}

WindowSet gen(const RotationReturns& r, std::size_t horizon) {
  require_precision(r.alpha, horizon);
  for (const auto& iv : r.intervals) {
    if (iv.lo < Rational(0) || Rational(1) < iv.hi || !(iv.lo < iv.hi)) {
      throw Error("rotation intervals must satisfy 0 <= lo < hi <= 1");
    }
  }
  // point(n) = frac(x0 + n*alpha) = num(n) / den
  const i128 den = i128{r.x0.denominator} * r.alpha.denominator;
  const i128 start = i128{r.x0.numerator} * r.alpha.denominator;
  const i128 step = i128{r.alpha.numerator} * r.x0.denominator;
  WindowSet out(horizon, horizon);
  for (std::size_t n = 1; n < horizon; ++n) {
    i128 num = floor_mod(start + step * static_cast<std::int64_t>(n), den);
    bool inside = false;
    for (const auto& iv : r.intervals) {
      i128 lo_cmp = num * iv.lo.denominator - i128{iv.lo.numerator} * den;
      i128 hi_cmp = num * iv.hi.denominator - i128{iv.hi.numerator} * den;
      bool hits_hi_as_zero = iv.hi == Rational(1) && num == 0;
      if (lo_cmp == 0 || hi_cmp == 0 || hits_hi_as_zero) {
        throw Error("endpoint hit at n=" + std::to_string(n));
      }
      if (lo_cmp > 0 && hi_cmp < 0) inside = true;
    }
    if (inside) out.insert(n);
  }
  return out;
}

WindowSet gen(const Beatty& b, std::size_t horizon) {
  if (!(Rational(1) < b.alpha)) throw Error("Beatty slope must exceed 1");
  require_precision(b.alpha, horizon);
  WindowSet out(horizon, horizon);
  for (std::int64_t n = 1;; ++n) {
    i128 v = floor_div(i128{n} * b.alpha.numerator, b.alpha.denominator);
    if (v >= static_cast<std::int64_t>(horizon)) break;
    out.insert(static_cast<std::size_t>(v));
  }
  return out;
}

WindowSet gen(const EvenNu2&, std::size_t horizon) {
  WindowSet out(horizon, horizon);
  for (std::size_t n = 1; n < horizon; ++n) {
    if (nu2(n) % 2 == 0) out.insert(n);
  }
  return out;
}

WindowSet gen(const Chacon&, std::size_t horizon) {
  std::string w = chacon_word(horizon);
  WindowSet out(horizon, horizon);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == '1') out.insert(i);
  }
  return out;
}

WindowSet gen(const DyadicBlocks& d, std::size_t horizon) {
  if (d.k == 0) throw Error("DyadicBlocks modulus must be positive");
  if (d.block_parity_rule.empty()) throw Error("DyadicBlocks rule must be nonempty");
  WindowSet out(horizon, horizon);
  for (std::size_t n = 0; (std::size_t{1} << n) < horizon; ++n) {
    std::size_t lo = std::size_t{1} << n;
    std::size_t hi = std::min(horizon, lo << 1);
    std::size_t residue = d.block_parity_rule[n % d.block_parity_rule.size()] % d.k;
    for (std::size_t m = lo; m < hi; ++m) {
      if (m % d.k == residue) out.insert(m);
    }
  }
  return out;
}

void check_schedule(const std::vector<Block>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].start > blocks[i].end) throw Error("schedule block with start > end");
    if (i > 0 && blocks[i].start < blocks[i - 1].end) throw Error("schedule blocks must be disjoint and increasing");
  }
}

WindowSet gen(const ResidueThickUnion& r, std::size_t horizon) {
  if (r.moduli.size() != r.residues.size() || r.moduli.empty()) {
    throw Error("moduli and residues must be nonempty lists of equal length");
  }
  for (auto p : r.moduli) {
    if (p == 0) throw Error("moduli must be positive");
  }
  check_schedule(r.schedule);
  WindowSet out(horizon, horizon);
  for (std::size_t j = 0; j < r.schedule.size(); ++j) {
    std::size_t i = j % r.moduli.size();
    std::size_t p = r.moduli[i], c = r.residues[i] % p;
    for (std::size_t m = r.schedule[j].start; m < std::min(r.schedule[j].end, horizon); ++m) {
      if (m % p == c) out.insert(m);
    }
  }
  return out;
}

WindowSet gen(const FsSet& f, std::size_t horizon) {
  WindowSet sums(horizon, horizon);
  for (std::size_t g : f.generators) {
    WindowSet next = sums;
    for (std::size_t m : sums.members()) {
      if (m + g < horizon) next.insert(m + g);
    }
    if (g < horizon) next.insert(g);
    sums = std::move(next);
  }
  return sums;
}

WindowSet gen(const ThickSchedule& t, std::size_t horizon) {
  check_schedule(t.blocks);
  WindowSet out(horizon, horizon);
  for (const auto& b : t.blocks) {
    for (std::size_t m = b.start; m < std::min(b.end, horizon); ++m) out.insert(m);
  }
  return out;
}

}  // namespace

WindowSet generate(const GeneratorSpec& spec) {
  if (spec.horizon > kMaxHorizon) throw Error("horizon exceeds 2^22");
  return std::visit([&](const auto& v) { return gen(v, spec.horizon); }, spec.variant);
}

Rational sqrt_convergent(std::uint64_t n, std::int64_t min_denominator) {
  auto a0 = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (i128{a0} * a0 > n) --a0;
  while (i128{a0 + 1} * (a0 + 1) <= n) ++a0;
  if (i128{a0} * a0 == n) throw Error("sqrt of a perfect square is rational");
  std::int64_t m = 0, d = 1, a = a0;
  i128 h_prev = 1, h = a0, k_prev = 0, k = 1;
  while (k < min_denominator) {
    m = d * a - m;
    d = (static_cast<std::int64_t>(n) - m * m) / d;
    a = (a0 + m) / d;
    i128 h_next = a * h + h_prev, k_next = a * k + k_prev;
    h_prev = h, h = h_next, k_prev = k, k = k_next;
  }
  return Rational(checked(h), checked(k));
}

Rational golden_convergent(std::int64_t min_denominator) {
  i128 p = 1, q = 1;  // F(k+1)/F(k)
  while (q < min_denominator) {
    i128 np = p + q;
    q = p;
    p = np;
  }
  return Rational(checked(p), checked(q));
}

std::vector<BatteryMember> rotation_battery(std::size_t horizon) {
  auto need = static_cast<std::int64_t>(horizon) * static_cast<std::int64_t>(horizon);
  std::vector<std::pair<std::string, Rational>> slopes = {
      {"golden", frac(golden_convergent(need))},   {"sqrt2", frac(sqrt_convergent(2, need))},
      {"sqrt3", frac(sqrt_convergent(3, need))},   {"sqrt5", frac(sqrt_convergent(5, need))},
      {"sqrt7", frac(sqrt_convergent(7, need))},
  };
  std::vector<RationalInterval> intervals = {
      {Rational(0), Rational(1, 2)},
      {Rational(1, 2), Rational(1)},
      {Rational(1, 4), Rational(3, 4)},
      {Rational(1, 8), Rational(3, 8)},
  };
  std::vector<BatteryMember> out;
  for (const auto& [name, alpha] : slopes) {
    for (const auto& iv : intervals) {
      GeneratorSpec spec{RotationReturns{alpha, Rational(0), {iv}}, horizon};
      out.push_back({name + ":(" + iv.lo.str() + "," + iv.hi.str() + ")", spec});
    }
  }
  return out;
}

GeneratorSpec geometric_residue_union(std::vector<std::size_t> moduli, std::vector<std::size_t> residues,
                                      std::size_t horizon) {
  ResidueThickUnion r{std::move(moduli), std::move(residues), {}};
  for (std::size_t lo = 1; lo < horizon; lo <<= 1) r.schedule.push_back({lo, std::min(horizon, lo << 1)});
  return {r, horizon};
}

}  // namespace setlab
