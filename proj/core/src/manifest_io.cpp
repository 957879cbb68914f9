#include "dioext/manifest_io.hpp"

#include "dioext/errors.hpp"

#include <fstream>
#include <sstream>

namespace dioext {

std::string manifest_to_text(const Manifest& m) {
  std::ostringstream os;
  os << "MANIFEST v1\n";
  if (!m.kind.empty()) os << "kind " << m.kind << "\n";
  os << "d " << m.d << "\n";
  os << "r " << m.r << "\n";
  os << "s " << m.s << "\n";
  for (const auto& [name, version] : m.assets) os << "asset " << name << " " << version << "\n";
  for (const auto& [role, file] : m.files) os << "file " << role << " " << file << "\n";
  for (const auto& [label, n] : m.sizes) os << "size " << label << " " << n << "\n";
  for (const ManifestCheck& c : m.checks)
    os << "check " << (c.pass ? "pass" : "fail") << " " << c.name << " :: " << c.details << "\n";
  if (!m.system_text.empty()) {
    std::size_t lines = 0;
    for (char ch : m.system_text)
      if (ch == '\n') ++lines;
    if (m.system_text.back() != '\n') ++lines;
    os << "system " << lines << "\n" << m.system_text;
    if (m.system_text.back() != '\n') os << "\n";
  }
  return os.str();
}

namespace {

int parse_count(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("MANIFEST v1: malformed ") + what);
  }
  if (pos != tok.size() || v < 0) throw ParseError(std::string("MANIFEST v1: malformed ") + what);
  return v;
}

} // namespace

Manifest manifest_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Manifest m;
  bool header = false;
  int system_lines = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (system_lines > 0) {
      m.system_text += line;
      m.system_text += '\n';
      --system_lines;
      continue;
    }
    if (line.empty()) continue;
    if (!header) {
      if (line != "MANIFEST v1") throw ParseError("MANIFEST v1: bad header");
      header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string rec;
    ls >> rec;
    if (rec == "kind") {
      if (!(ls >> m.kind)) throw ParseError("MANIFEST v1: malformed kind");
    } else if (rec == "d" || rec == "r" || rec == "s") {
      std::string tok;
      if (!(ls >> tok)) throw ParseError("MANIFEST v1: malformed count");
      int v = parse_count(tok, rec.c_str());
      (rec == "d" ? m.d : rec == "r" ? m.r : m.s) = v;
    } else if (rec == "asset" || rec == "file") {
      std::string a, b;
      if (!(ls >> a >> b)) throw ParseError("MANIFEST v1: malformed " + rec + " record");
      (rec == "asset" ? m.assets : m.files).emplace_back(a, b);
    } else if (rec == "size") {
      std::string label, tok;
      if (!(ls >> label >> tok)) throw ParseError("MANIFEST v1: malformed size record");
      std::uint64_t n = 0;
      try {
        std::size_t pos = 0;
        n = std::stoull(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("MANIFEST v1: malformed size record");
      }
      m.sizes.emplace_back(label, n);
    } else if (rec == "check") {
      std::string status;
      if (!(ls >> status) || (status != "pass" && status != "fail"))
        throw ParseError("MANIFEST v1: malformed check status");
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
      std::size_t sep = rest.find(" :: ");
      if (sep == std::string::npos) throw ParseError("MANIFEST v1: check without details");
      ManifestCheck c;
      c.name = rest.substr(0, sep);
      c.pass = status == "pass";
      c.details = rest.substr(sep + 4);
      m.checks.push_back(std::move(c));
    } else if (rec == "system") {
      std::string tok;
      if (!(ls >> tok)) throw ParseError("MANIFEST v1: malformed system record");
      system_lines = parse_count(tok, "system line count");
    } else {
      throw ParseError("MANIFEST v1: unknown record '" + rec + "'");
    }
  }
  if (!header) throw ParseError("MANIFEST v1: empty input");
  if (system_lines > 0) throw ParseError("MANIFEST v1: truncated system block");
  return m;
}

void write_manifest_file(const std::string& path, const Manifest& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << manifest_to_text(m);
  if (!out) throw ParseError("write failed: " + path);
}

Manifest read_manifest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return manifest_from_text(ss.str());
}

} // namespace dioext
