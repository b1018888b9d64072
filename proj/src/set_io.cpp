#include "setlab/set_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace setlab {

namespace {

std::size_t parse_number(std::string_view s, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("malformed ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::size_t parse_field(const std::string& token, const std::string& key) {
  if (token.rfind(key + "=", 0) != 0) throw ParseError("expected " + key + "=<n>, got '" + token + "'");
  return parse_number(std::string_view(token).substr(key.size() + 1), key.c_str());
}

}  // namespace

std::string to_text(const WindowSet& a) {
  std::ostringstream os;
  os << "H=" << a.coded_horizon() << " E=" << a.effective_horizon() << "\n";
  auto runs = a.runs();
  std::size_t n = a.count();
  if (2 * runs.size() < n) {
    os << "runs:";
    for (auto [s, len] : runs) os << ' ' << s << '-' << (s + len - 1);
  } else {
    os << "members:";
    for (std::size_t m : a.members()) os << ' ' << m;
  }
  os << "\n";
  return os.str();
}

WindowSet parse_set_text(const std::string& text) {
  std::istringstream in(text);
  std::string header, body;
  if (!std::getline(in, header)) throw ParseError("empty set file");
  if (!std::getline(in, body)) throw ParseError("missing membership line");
  std::string extra;
  while (std::getline(in, extra)) {
    if (extra.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("trailing content after membership line");
  }
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (!body.empty() && body.back() == '\r') body.pop_back();

  std::istringstream hs(header);
  std::string ht, et, rest;
  if (!(hs >> ht >> et) || (hs >> rest)) throw ParseError("header must be 'H=<coded> E=<effective>'");
  std::size_t h = parse_field(ht, "H");
  std::size_t e = parse_field(et, "E");
  if (e > h) throw ParseError("effective horizon exceeds coded horizon");
  if (e > kMaxHorizon) throw ParseError("effective horizon exceeds 2^22");

  std::istringstream bs(body);
  std::string kind;
  if (!(bs >> kind)) throw ParseError("missing 'members:' or 'runs:'");
  WindowSet out(e, h);
  std::string tok;
  bool first = true;
  std::size_t prev_end = 0;
  if (kind == "members:") {
    while (bs >> tok) {
      std::size_t m = parse_number(tok, "member");
      if (m >= e) throw ParseError("member " + tok + " outside window");
      if (!first && m <= prev_end) throw ParseError("members must be strictly increasing");
      out.insert(m);
      prev_end = m;
      first = false;
    }
  } else if (kind == "runs:") {
    while (bs >> tok) {
      auto dash = tok.find('-');
      if (dash == std::string::npos) throw ParseError("run '" + tok + "' is not a-b");
      std::size_t a = parse_number(std::string_view(tok).substr(0, dash), "run start");
      std::size_t b = parse_number(std::string_view(tok).substr(dash + 1), "run end");
      if (a > b) throw ParseError("run '" + tok + "' is reversed");
      if (b >= e) throw ParseError("run " + tok + " outside window");
      if (!first && a <= prev_end) throw ParseError("runs must be disjoint and increasing");
      for (std::size_t i = a; i <= b; ++i) out.insert(i);
      prev_end = b;
      first = false;
    }
  } else {
    throw ParseError("expected 'members:' or 'runs:', got '" + kind + "'");
  }
  return out;
}

WindowSet read_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_set_text(ss.str());
}

void write_set_file(const std::string& path, const WindowSet& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << to_text(a);
}

}  // namespace setlab
