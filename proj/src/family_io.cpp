#include "syz/family_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "syz/errors.hpp"

namespace syz {

namespace {

std::string next_line(std::istream& is, int& line_no) {
  std::string line;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  throw ParseError("unexpected end of input after line " + std::to_string(line_no));
}

void expect_end(std::istringstream& ls, int line_no) {
  std::string extra;
  if (ls >> extra) throw ParseError("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
}

}  // namespace

void write_family(std::ostream& os, const MonomialFamily& family) {
  os << family.N() << ' ' << family.d() << ' ' << family.size() << '\n';
  for (const auto& m : family) {
    auto e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << ' ';
      os << e[i];
    }
    os << '\n';
  }
}

std::string format_family(const MonomialFamily& family) {
  std::ostringstream os;
  write_family(os, family);
  return os.str();
}

MonomialFamily read_family(std::istream& is) {
  int line_no = 0;
  std::istringstream header(next_line(is, line_no));
  long long N = 0, d = 0, n = 0;
  if (!(header >> N >> d >> n)) throw ParseError("line 1: expected 'N d n'");
  expect_end(header, line_no);
  if (N < 1 || d < 1 || n < 0) throw ParseError("line 1: need N >= 1, d >= 1, n >= 0");

  std::vector<Monomial> members;
  members.reserve(static_cast<std::size_t>(n));
  for (long long j = 0; j < n; ++j) {
    std::istringstream ls(next_line(is, line_no));
    std::vector<int> exps(static_cast<std::size_t>(N) + 1);
    for (auto& e : exps) {
      if (!(ls >> e)) throw ParseError("line " + std::to_string(line_no) + ": expected " +
                                       std::to_string(N + 1) + " exponents");
      if (e < 0) throw ParseError("line " + std::to_string(line_no) + ": negative exponent");
    }
    expect_end(ls, line_no);
    members.emplace_back(std::move(exps));
  }
  std::string rest;
  while (std::getline(is, rest)) {
    ++line_no;
    if (rest.find_first_not_of(" \t\r") != std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": more members than declared");
    }
  }
  try {
    return MonomialFamily(static_cast<int>(N), static_cast<int>(d), std::move(members));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

MonomialFamily parse_family(const std::string& text) {
  std::istringstream is(text);
  return read_family(is);
}

MonomialFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_family(in);
}

void save_family(const std::string& path, const MonomialFamily& family) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_family(out, family);
}

}  // namespace syz
