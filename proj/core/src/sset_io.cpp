#include "dioext/sset_io.hpp"

#include <fstream>
#include <sstream>

namespace dioext {

std::string word_to_text(DegWord w) {
  std::string out = "[";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (w & (1u << i)) {
      if (!first) out += ' ';
      out += std::to_string(i);
      first = false;
    }
  }
  out += ']';
  return out;
}

namespace {

DegWord word_from_tokens(const std::vector<int>& xs) {
  DegWord w = 0;
  int prev = -1;
  for (int x : xs) {
    if (x < 0 || x >= kMaxDim || x <= prev) throw ParseError("malformed degeneracy word");
    w |= (1u << x);
    prev = x;
  }
  return w;
}

// Splits "[a b c]" (possibly empty "[]") already tokenized by whitespace.
struct WordReader {
  std::vector<int> xs;
  bool open = false;
  bool done = false;

  void feed(const std::string& tok) {
    std::string t = tok;
    if (!open) {
      if (t.empty() || t.front() != '[') throw ParseError("expected '[' in word");
      open = true;
      t = t.substr(1);
    }
    if (!t.empty() && t.back() == ']') {
      done = true;
      t = t.substr(0, t.size() - 1);
    }
    if (!t.empty()) {
      std::size_t pos = 0;
      int v = std::stoi(t, &pos);
      if (pos != t.size()) throw ParseError("malformed word entry");
      xs.push_back(v);
    }
  }
};

DegWord parse_word(std::istringstream& in) {
  WordReader r;
  std::string tok;
  while (!r.done) {
    if (!(in >> tok)) {
      if (!r.open) return 0; // word omitted entirely: empty
      throw ParseError("unterminated degeneracy word");
    }
    r.feed(tok);
  }
  return word_from_tokens(r.xs);
}

} // namespace

std::string sset_to_text(const SimplicialSet& X) {
  std::string out = "SSET v1\n";
  for (std::uint32_t id = 0; id < X.size(); ++id) {
    int d = X.dim(id);
    out += "simplex " + std::to_string(id) + " dim " + std::to_string(d) + "\n";
    for (int i = 0; i <= d && d > 0; ++i) {
      SimplexRef f = X.face(id, i);
      out += "face " + std::to_string(id) + " " + std::to_string(i) + " -> " +
             std::to_string(f.target) + " " + word_to_text(f.word) + "\n";
    }
  }
  if (X.basepoint()) out += "basepoint " + std::to_string(*X.basepoint()) + "\n";
  return out;
}

SimplicialSet sset_from_text(const std::string& text) {
  std::istringstream lines(text);
  std::string line;

  struct Rec {
    int dim = -1;
    std::vector<SimplexRef> faces;
    std::vector<bool> have;
  };
  std::vector<Rec> recs;
  long basepoint = -1;

  bool header = false;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string kw;
    in >> kw;
    if (!header) {
      if (kw != "SSET") throw ParseError("SSET v1: missing header");
      std::string v;
      in >> v;
      if (v != "v1") throw ParseError("SSET v1: unsupported version");
      header = true;
      continue;
    }
    if (kw == "simplex") {
      long id = -1, d = -1;
      std::string dimkw;
      if (!(in >> id >> dimkw >> d) || dimkw != "dim") throw ParseError("SSET v1: bad simplex line");
      if (id != static_cast<long>(recs.size())) throw ParseError("SSET v1: ids must be consecutive from 0");
      if (d < 0 || d > kMaxDim) throw ParseError("SSET v1: dimension out of range");
      Rec r;
      r.dim = static_cast<int>(d);
      if (d > 0) {
        r.faces.assign(static_cast<std::size_t>(d) + 1, SimplexRef{});
        r.have.assign(static_cast<std::size_t>(d) + 1, false);
      }
      recs.push_back(std::move(r));
    } else if (kw == "face") {
      long id = -1, i = -1, tgt = -1;
      std::string arrow;
      if (!(in >> id >> i >> arrow >> tgt) || arrow != "->") throw ParseError("SSET v1: bad face line");
      if (id < 0 || id >= static_cast<long>(recs.size())) throw ParseError("SSET v1: face before simplex");
      Rec& r = recs[static_cast<std::size_t>(id)];
      if (i < 0 || i > r.dim || r.dim == 0) throw ParseError("SSET v1: face index out of range");
      if (tgt < 0) throw ParseError("SSET v1: bad face target");
      DegWord w = parse_word(in);
      r.faces[static_cast<std::size_t>(i)] = SimplexRef{static_cast<std::uint32_t>(tgt), w};
      r.have[static_cast<std::size_t>(i)] = true;
    } else if (kw == "basepoint") {
      if (!(in >> basepoint) || basepoint < 0) throw ParseError("SSET v1: bad basepoint line");
    } else {
      throw ParseError("SSET v1: unknown record '" + kw + "'");
    }
  }
  if (!header) throw ParseError("SSET v1: empty input");

  SimplicialSet X;
  for (std::size_t id = 0; id < recs.size(); ++id) {
    const Rec& r = recs[id];
    for (bool h : r.have)
      if (!h) throw ParseError("SSET v1: missing face record for simplex " + std::to_string(id));
    try {
      X.add_simplex(r.dim, r.faces);
    } catch (const Error& e) {
      throw ParseError("SSET v1: simplex " + std::to_string(id) + ": " + e.what());
    }
  }
  if (basepoint >= 0) {
    if (basepoint >= static_cast<long>(X.size()) || X.dim(static_cast<std::uint32_t>(basepoint)) != 0)
      throw ParseError("SSET v1: basepoint is not a vertex");
    X.set_basepoint(static_cast<std::uint32_t>(basepoint));
  }
  return X;
}

std::string smap_to_text(const SmapFile& f) {
  std::string out = "SMAP v1\n";
  out += "domain " + f.domain + "\n";
  out += "codomain " + f.codomain + "\n";
  for (std::size_t i = 0; i < f.image.size(); ++i) {
    out += "map " + std::to_string(i) + " -> " + std::to_string(f.image[i].target) + " " +
           word_to_text(f.image[i].word) + "\n";
  }
  return out;
}

SmapFile smap_from_text(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  SmapFile f;
  bool header = false;
  bool have_dom = false, have_cod = false;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string kw;
    in >> kw;
    if (!header) {
      std::string v;
      if (kw != "SMAP" || !(in >> v) || v != "v1") throw ParseError("SMAP v1: missing header");
      header = true;
      continue;
    }
    if (kw == "domain") {
      if (!(in >> f.domain)) throw ParseError("SMAP v1: bad domain line");
      have_dom = true;
    } else if (kw == "codomain") {
      if (!(in >> f.codomain)) throw ParseError("SMAP v1: bad codomain line");
      have_cod = true;
    } else if (kw == "map") {
      long id = -1, tgt = -1;
      std::string arrow;
      if (!(in >> id >> arrow >> tgt) || arrow != "->" || tgt < 0)
        throw ParseError("SMAP v1: bad map line");
      if (id != static_cast<long>(f.image.size()))
        throw ParseError("SMAP v1: map ids must be consecutive from 0");
      DegWord w = parse_word(in);
      f.image.push_back(SimplexRef{static_cast<std::uint32_t>(tgt), w});
    } else {
      throw ParseError("SMAP v1: unknown record '" + kw + "'");
    }
  }
  if (!header) throw ParseError("SMAP v1: empty input");
  if (!have_dom || !have_cod) throw ParseError("SMAP v1: missing domain/codomain");
  return f;
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
  if (!out) throw ParseError("write failed: " + path);
}
} // namespace

void write_sset_file(const std::string& path, const SimplicialSet& X) { spit(path, sset_to_text(X)); }

SSetPtr read_sset_file(const std::string& path) {
  return freeze(sset_from_text(slurp(path)));
}

void write_smap_file(const std::string& path, const SmapFile& f) { spit(path, smap_to_text(f)); }

SmapFile read_smap_file(const std::string& path) { return smap_from_text(slurp(path)); }

} // namespace dioext
