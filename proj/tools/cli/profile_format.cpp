#include "profile_format.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dirac1d::cli {

namespace {

std::string strip(const std::string& raw) {
  const auto hash = raw.find('#');
  std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& token, int line, const char* what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ProfileParseError(line, std::string("bad ") + what + " '" + token + "'");
  }
  if (used != token.size())
    throw ProfileParseError(line, std::string("bad ") + what + " '" + token + "'");
  return value;
}

}  // namespace

PotentialProfile parse_profile(std::istream& in) {
  PotentialProfile profile;
  bool haveLeft = false, haveRight = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = strip(raw);
    if (text.empty()) continue;
    std::istringstream tokens(text);
    std::string kind, extra;
    tokens >> kind;
    if (kind == "lead-left") {
      if (haveLeft) throw ProfileParseError(line, "duplicate lead-left");
      if (haveRight) throw ProfileParseError(line, "lead-left after lead-right");
      std::string v;
      if (!(tokens >> v)) throw ProfileParseError(line, "expected 'lead-left <V>'");
      profile.leftLeadV = parse_number(v, line, "potential");
      haveLeft = true;
    } else if (kind == "lead-right") {
      if (!haveLeft) throw ProfileParseError(line, "lead-right before lead-left");
      if (haveRight) throw ProfileParseError(line, "duplicate lead-right");
      std::string v;
      if (!(tokens >> v)) throw ProfileParseError(line, "expected 'lead-right <V>'");
      profile.rightLeadV = parse_number(v, line, "potential");
      haveRight = true;
    } else if (kind == "segment") {
      if (!haveLeft) throw ProfileParseError(line, "segment before lead-left");
      if (haveRight) throw ProfileParseError(line, "segment after lead-right");
      std::string w, v;
      if (!(tokens >> w >> v))
        throw ProfileParseError(line, "expected 'segment <width> <V>'");
      Segment s{parse_number(w, line, "width"), parse_number(v, line, "potential")};
      if (!(s.width > 0.0))
        throw ProfileParseError(line, "segment width must be > 0");
      profile.segments.push_back(s);
    } else {
      throw ProfileParseError(line, "unknown directive '" + kind + "'");
    }
    if (tokens >> extra)
      throw ProfileParseError(line, "trailing token '" + extra + "'");
  }
  if (!haveLeft) throw ProfileParseError(line, "missing lead-left");
  if (!haveRight) throw ProfileParseError(line, "missing lead-right");
  return profile;
}

PotentialProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file '" + path + "'");
  return parse_profile(in);
}

std::string format_profile(const PotentialProfile& profile) {
  const auto num = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  std::string out = "lead-left " + num(profile.leftLeadV) + "\n";
  for (const Segment& s : profile.segments)
    out += "segment " + num(s.width) + " " + num(s.V) + "\n";
  out += "lead-right " + num(profile.rightLeadV) + "\n";
  return out;
}

}  // namespace dirac1d::cli
