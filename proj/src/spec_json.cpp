#include "setlab/spec_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace setlab {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) { return {{"numerator", r.numerator}, {"denominator", r.denominator}}; }

Rational rational_from(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_object()) return Rational(j.at("numerator").get<std::int64_t>(), j.at("denominator").get<std::int64_t>());
  throw ParseError("rational must be an object, an integer, or a \"p/q\" string");
}

json blocks_json(const std::vector<Block>& blocks) {
  json a = json::array();
  for (const auto& b : blocks) a.push_back({b.start, b.end});
  return a;
}

std::vector<Block> blocks_from(const json& j) {
  std::vector<Block> out;
  for (const auto& b : j) {
    if (!b.is_array() || b.size() != 2) throw ParseError("block must be a [start, end] pair");
    out.push_back({b[0].get<std::size_t>(), b[1].get<std::size_t>()});
  }
  return out;
}

struct ToJson {
  json& j;
  void operator()(const RotationReturns& r) const {
    j["alpha"] = rational_json(r.alpha);
    j["x0"] = rational_json(r.x0);
    json ivs = json::array();
    for (const auto& iv : r.intervals) ivs.push_back({rational_json(iv.lo), rational_json(iv.hi)});
    j["intervals"] = ivs;
  }
  void operator()(const Beatty& b) const { j["alpha"] = rational_json(b.alpha); }
  void operator()(const EvenNu2&) const {}
  void operator()(const Chacon&) const {}
  void operator()(const DyadicBlocks& d) const {
    j["k"] = d.k;
    j["block_parity_rule"] = d.block_parity_rule;
  }
  void operator()(const ResidueThickUnion& r) const {
    j["moduli"] = r.moduli;
    j["residues"] = r.residues;
    j["schedule"] = blocks_json(r.schedule);
  }
  void operator()(const FsSet& f) const { j["generators"] = f.generators; }
  void operator()(const ThickSchedule& t) const { j["blocks"] = blocks_json(t.blocks); }
};

GeneratorVariant variant_from(const std::string& name, const json& j) {
  if (name == "RotationReturns") {
    RotationReturns r;
    r.alpha = rational_from(j.at("alpha"));
    r.x0 = j.contains("x0") ? rational_from(j.at("x0")) : Rational(0);
    for (const auto& iv : j.at("intervals")) {
      if (!iv.is_array() || iv.size() != 2) throw ParseError("interval must be a [lo, hi] pair");
      r.intervals.push_back({rational_from(iv[0]), rational_from(iv[1])});
    }
    return r;
  }
  if (name == "Beatty") return Beatty{rational_from(j.at("alpha"))};
  if (name == "EvenNu2") return EvenNu2{};
  if (name == "Chacon") return Chacon{};
  if (name == "DyadicBlocks") {
    return DyadicBlocks{j.at("k").get<std::size_t>(), j.at("block_parity_rule").get<std::vector<std::size_t>>()};
  }
  if (name == "ResidueThickUnion") {
    return ResidueThickUnion{j.at("moduli").get<std::vector<std::size_t>>(),
                             j.at("residues").get<std::vector<std::size_t>>(), blocks_from(j.at("schedule"))};
  }
  if (name == "FsSet") return FsSet{j.at("generators").get<std::vector<std::size_t>>()};
  if (name == "ThickSchedule") return ThickSchedule{blocks_from(j.at("blocks"))};
  throw ParseError("unknown generator variant '" + name + "'");
}

}  // namespace

std::string spec_to_json(const GeneratorSpec& spec) {
  json j;
  j["variant"] = variant_name(spec.variant);
  j["horizon"] = spec.horizon;
  std::visit(ToJson{j}, spec.variant);
  return j.dump(2) + "\n";
}

GeneratorSpec spec_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    GeneratorSpec spec{variant_from(j.at("variant").get<std::string>(), j), j.at("horizon").get<std::size_t>()};
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed generator spec: ") + e.what());
  }
}

GeneratorSpec read_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return spec_from_json(ss.str());
}

}  // namespace setlab
