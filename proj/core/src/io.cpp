#include "rootsum/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rootsum {

namespace {

// Strips comments, splits on whitespace. Returns false at EOF.
bool next_tokens(std::istream& in, std::vector<std::string>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    if (size_t pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    tokens.clear();
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) tokens.push_back(t);
    if (!tokens.empty()) return true;
  }
  return false;
}

double to_real(const std::string& s) {
  double v = 0.0;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e)
    throw ParseError("bad number: '" + s + "'");
  return v;
}

long to_int(const std::string& s) {
  long v = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e)
    throw ParseError("bad integer: '" + s + "'");
  return v;
}

}  // namespace

Poly parse_poly(std::istream& in) {
  std::vector<std::string> tok;
  if (!next_tokens(in, tok) || tok.size() != 1)
    throw ParseError("polynomial file: expected a single degree on line 1");
  long d = to_int(tok[0]);
  if (d < 0) throw ParseError("polynomial degree must be nonnegative");
  std::vector<Complex> coeffs;
  coeffs.reserve(static_cast<size_t>(d) + 1);
  for (long i = 0; i <= d; ++i) {
    if (!next_tokens(in, tok) || tok.size() != 2)
      throw ParseError("polynomial file: expected 're im' on each coefficient line");
    coeffs.emplace_back(to_real(tok[0]), to_real(tok[1]));
  }
  Poly p(std::move(coeffs));
  if (p.degree() != d)
    throw ParseError("polynomial file: leading coefficient is zero");
  return p;
}

CMatrix parse_matrix(std::istream& in) {
  std::vector<std::string> tok;
  if (!next_tokens(in, tok) || tok.size() != 1)
    throw ParseError("matrix file: expected the order n on line 1");
  long n = to_int(tok[0]);
  if (n < 1) throw ParseError("matrix order must be positive");
  CMatrix m(static_cast<int>(n));
  for (long i = 0; i < n; ++i) {
    if (!next_tokens(in, tok) || tok.size() != static_cast<size_t>(n))
      throw ParseError("matrix file: expected n 're,im' entries per row");
    for (long j = 0; j < n; ++j) {
      const std::string& s = tok[static_cast<size_t>(j)];
      size_t comma = s.find(',');
      if (comma == std::string::npos)
        throw ParseError("matrix entry must be 're,im': '" + s + "'");
      m.at(static_cast<int>(i), static_cast<int>(j)) =
          Complex(to_real(s.substr(0, comma)), to_real(s.substr(comma + 1)));
    }
  }
  return m;
}

StraightLineProgram parse_slp(std::istream& in) {
  std::vector<std::string> tok;
  std::vector<SlpInstr> instrs;
  while (next_tokens(in, tok)) {
    if (tok.size() < 2) throw ParseError("program line needs 'idx op ...'");
    long idx = to_int(tok[0]);
    if (idx != static_cast<long>(instrs.size()))
      throw ParseError("program indices must be consecutive from 0");
    const std::string& op = tok[1];
    SlpInstr ins;
    if (op == "in") {
      if (tok.size() != 2) throw ParseError("'in' takes no arguments");
      ins.op = SlpInstr::Op::input;
    } else if (op == "const") {
      if (tok.size() != 4) throw ParseError("'const' takes re im");
      ins.op = SlpInstr::Op::constant;
      ins.k = Complex(to_real(tok[2]), to_real(tok[3]));
    } else if (op == "add" || op == "sub" || op == "mul" || op == "div") {
      if (tok.size() != 4) throw ParseError("'" + op + "' takes two operand indices");
      ins.op = op == "add"   ? SlpInstr::Op::add
               : op == "sub" ? SlpInstr::Op::sub
               : op == "mul" ? SlpInstr::Op::mul
                             : SlpInstr::Op::div;
      ins.a = static_cast<int>(to_int(tok[2]));
      ins.b = static_cast<int>(to_int(tok[3]));
    } else if (op == "smul") {
      if (tok.size() != 5) throw ParseError("'smul' takes re im and an operand index");
      ins.op = SlpInstr::Op::smul;
      ins.k = Complex(to_real(tok[2]), to_real(tok[3]));
      ins.a = static_cast<int>(to_int(tok[4]));
    } else {
      throw ParseError("unknown program op '" + op + "'");
    }
    instrs.push_back(ins);
  }
  if (instrs.empty()) throw ParseError("empty program");
  return StraightLineProgram(std::move(instrs));
}

std::vector<Complex> parse_centers(std::istream& in) {
  std::vector<std::string> tok;
  std::vector<Complex> out;
  while (next_tokens(in, tok)) {
    if (tok.size() != 2) throw ParseError("centers file: expected 're im' per line");
    out.emplace_back(to_real(tok[0]), to_real(tok[1]));
  }
  return out;
}

namespace {
template <typename T>
T load(const std::string& path, T (*parse)(std::istream&)) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  return parse(f);
}
}  // namespace

Poly load_poly(const std::string& path) { return load(path, parse_poly); }
CMatrix load_matrix(const std::string& path) { return load(path, parse_matrix); }
StraightLineProgram load_slp(const std::string& path) { return load(path, parse_slp); }
std::vector<Complex> load_centers(const std::string& path) { return load(path, parse_centers); }

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  return format_real(z.real()) + " " + format_real(z.imag());
}

void print_poly(std::ostream& out, const Poly& p) {
  out << p.degree() << "\n";
  for (int i = 0; i <= p.degree(); ++i) out << format_complex(p.at(i)) << "\n";
}

}  // namespace rootsum
