#include "dioext/dio_io.hpp"

#include <fstream>
#include <sstream>

namespace dioext {

namespace {

std::string var_name(const DioSystem& S, int v) {
  if (S.paired && v >= S.num_vars) return "y" + std::to_string(v - S.num_vars + 1);
  return "x" + std::to_string(v + 1);
}

std::string term_to_text(const DioSystem& S, const DioTerm& t) {
  std::string out = t.coeff.str();
  for (int v : t.monomial) out += "*" + var_name(S, v);
  return out;
}

BigInt parse_int(const std::string& tok) {
  std::size_t i = tok.size() > 0 && (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) throw ParseError("DIO v1: bad integer '" + tok + "'");
  for (std::size_t k = i; k < tok.size(); ++k)
    if (tok[k] < '0' || tok[k] > '9') throw ParseError("DIO v1: bad integer '" + tok + "'");
  return BigInt(tok);
}

int parse_var(const std::string& tok, const DioSystem& S) {
  if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
    throw ParseError("DIO v1: bad variable '" + tok + "'");
  if (tok[0] == 'y' && !S.paired) throw ParseError("DIO v1: y-variable in unpaired system");
  long k = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw ParseError("DIO v1: bad variable '" + tok + "'");
    k = k * 10 + (tok[i] - '0');
    if (k > S.num_vars) throw ParseError("DIO v1: variable index out of range: " + tok);
  }
  if (k < 1) throw ParseError("DIO v1: variable indices start at 1");
  return static_cast<int>(k - 1 + (tok[0] == 'y' ? S.num_vars : 0));
}

DioTerm parse_term(const std::string& atom, const DioSystem& S) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : atom) {
    if (c == '*') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  DioTerm t;
  t.coeff = parse_int(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) t.monomial.push_back(parse_var(parts[i], S));
  std::sort(t.monomial.begin(), t.monomial.end());
  return t;
}

} // namespace

std::string dio_to_text(const DioSystem& S) {
  std::string out = "DIO v1\n";
  out += "vars " + std::to_string(S.num_vars) + (S.paired ? " paired" : "") + "\n";
  for (const auto& e : S.eqs) {
    out += "eq:";
    if (e.terms.empty()) out += " 0";
    for (std::size_t i = 0; i < e.terms.size(); ++i)
      out += (i ? " + " : " ") + term_to_text(S, e.terms[i]);
    out += " = " + e.rhs.str() + "\n";
  }
  return out;
}

DioSystem dio_from_text(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  DioSystem S;
  bool header = false, have_vars = false;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string kw;
    in >> kw;
    if (!header) {
      std::string v;
      if (kw != "DIO" || !(in >> v) || v != "v1") throw ParseError("DIO v1: missing header");
      header = true;
      continue;
    }
    if (kw == "vars") {
      if (have_vars) throw ParseError("DIO v1: duplicate vars line");
      long r = -1;
      if (!(in >> r) || r < 0) throw ParseError("DIO v1: bad vars line");
      S.num_vars = static_cast<int>(r);
      std::string flag;
      if (in >> flag) {
        if (flag != "paired") throw ParseError("DIO v1: bad vars flag '" + flag + "'");
        S.paired = true;
      }
      have_vars = true;
    } else if (kw == "eq:") {
      if (!have_vars) throw ParseError("DIO v1: eq before vars");
      DioEquation e;
      std::string tok;
      bool want_term = true, done = false;
      while (in >> tok) {
        if (done) throw ParseError("DIO v1: trailing tokens after right hand side");
        if (tok == "=") {
          if (want_term) throw ParseError("DIO v1: dangling '+'");
          if (!(in >> tok)) throw ParseError("DIO v1: missing right hand side");
          e.rhs = parse_int(tok);
          done = true;
          continue;
        }
        if (tok == "+") {
          if (want_term) throw ParseError("DIO v1: consecutive '+'");
          want_term = true;
          continue;
        }
        if (!want_term) throw ParseError("DIO v1: missing '+' between terms");
        DioTerm t = parse_term(tok, S);
        if (!t.monomial.empty() || t.coeff != 0) e.terms.push_back(std::move(t));
        want_term = false;
      }
      if (!done) throw ParseError("DIO v1: equation has no '='");
      S.eqs.push_back(std::move(e));
    } else {
      throw ParseError("DIO v1: unknown record '" + kw + "'");
    }
  }
  if (!header) throw ParseError("DIO v1: empty input");
  if (!have_vars) throw ParseError("DIO v1: missing vars line");
  S.form = classify(S);
  return S;
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
} // namespace

void write_dio_file(const std::string& path, const DioSystem& S) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << dio_to_text(S);
  if (!out) throw ParseError("write failed: " + path);
}

DioSystem read_dio_file(const std::string& path) { return dio_from_text(slurp(path)); }

} // namespace dioext
