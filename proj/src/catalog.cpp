#include "clifinv/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "clifinv/errors.hpp"

namespace clifinv {
namespace detail {

struct EmbeddedFile {
  const char* name;
  const char* text;
};

// Generated at build time from data/catalog/*.cat.
extern const EmbeddedFile kEmbeddedCatalog[];
extern const std::size_t kEmbeddedCatalogSize;

}  // namespace detail

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

int parse_dim(std::string_view s) {
  if (s.size() != 1 || s[0] < '0' || s[0] > '0' + kMaxDimension) {
    throw std::invalid_argument("bad dimension '" + std::string(s) + "'");
  }
  return s[0] - '0';
}

std::string member_key(char family, int set) { return std::string(1, family) + std::to_string(set); }

}  // namespace

std::string_view to_string(FormulaStatus status) {
  return status == FormulaStatus::verified ? "verified" : "unverified";
}

const FormulaCatalog& FormulaCatalog::builtin() {
  static const FormulaCatalog catalog = [] {
    FormulaCatalog c;
    for (std::size_t i = 0; i < detail::kEmbeddedCatalogSize; ++i) {
      c.load_text(detail::kEmbeddedCatalog[i].text, detail::kEmbeddedCatalog[i].name);
    }
    c.finalize();
    return c;
  }();
  return catalog;
}

FormulaCatalog FormulaCatalog::load_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (item.path().extension() == ".cat") files.push_back(item.path());
  }
  std::sort(files.begin(), files.end());
  FormulaCatalog c;
  for (const auto& path : files) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    c.load_text(buffer.str(), path.filename().string());
  }
  c.finalize();
  return c;
}

void FormulaCatalog::load_text(std::string_view text, std::string_view source) {
  ExprBindings names;
  FormulaKind kind = FormulaKind::general;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    const auto where = [&] { return std::string(source) + ":" + std::to_string(line_no) + ": "; };
    if (line.empty() || line.front() == '#') continue;
    try {
      if (line.starts_with("@let ")) {
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("@let needs '='");
        std::string name(trim(line.substr(5, eq - 5)));
        ExprPtr value = parse_expr(trim(line.substr(eq + 1)), names);
        names[name] = value;
      } else if (line.starts_with("@default ")) {
        auto parts = split(trim(line.substr(9)), ' ');
        if (parts.size() != 2) throw std::invalid_argument("@default needs 'n id'");
        defaults_[parse_dim(parts[0])] = std::string(parts[1]);
      } else if (line.starts_with("@kind ")) {
        std::string_view k = trim(line.substr(6));
        if (k == "general") {
          kind = FormulaKind::general;
        } else if (k == "even") {
          kind = FormulaKind::even;
        } else {
          throw std::invalid_argument("unknown kind '" + std::string(k) + "'");
        }
      } else if (line.starts_with("@member ")) {
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("@member needs '='");
        std::string set(trim(line.substr(8, eq - 8)));
        if (set.size() != 2 || (set[0] != 'S' && set[0] != 'T') || set[1] < '1' || set[1] > '3') {
          throw std::invalid_argument("bad member set '" + set + "'");
        }
        auto parts = split(line.substr(eq + 1), '|');
        if (parts.size() != 2) throw std::invalid_argument("@member needs 'det | adjugate'");
        auto& list = members_[set];
        FormulaEntry term;
        term.id = set + "." + std::to_string(list.size() + 1);
        term.dim = 6;
        term.det = parse_expr(parts[0], names);
        term.adjugate = parse_expr(parts[1], names);
        term.provenance = std::string(source);
        list.push_back(std::move(term));
      } else if (line.front() == '@') {
        throw std::invalid_argument("unknown directive");
      } else {
        auto parts = split(line, '|');
        if (parts.size() != 6) throw std::invalid_argument("expected 6 '|'-separated fields");
        FormulaEntry e;
        e.id = std::string(parts[0]);
        e.dim = parse_dim(parts[1]);
        e.det = parse_expr(parts[2], names);
        e.adjugate = parse_expr(parts[3], names);
        e.provenance = std::string(parts[4]);
        if (parts[5] == "verified") {
          e.status = FormulaStatus::verified;
        } else if (parts[5] == "unverified") {
          e.status = FormulaStatus::unverified;
        } else {
          throw std::invalid_argument("bad status '" + std::string(parts[5]) + "'");
        }
        e.kind = kind;
        add(std::move(e));
      }
    } catch (const std::exception& err) {
      throw CatalogDefect(where() + err.what());
    }
  }
}

void FormulaCatalog::finalize() {
  for (const auto& [n, id] : defaults_) {
    const FormulaEntry* e = find(id);
    if (!e) throw CatalogDefect("default for n=" + std::to_string(n) + " names unknown id " + id);
    if (e->dim != n) throw CatalogDefect("default " + id + " has the wrong dimension");
  }
  for (char family : {'S', 'T'}) {
    bool complete = true;
    for (int set = 1; set <= 3; ++set) complete = complete && members_.count(member_key(family, set));
    if (!complete) continue;
    const auto& s1 = triplet_members(family, 1);
    const auto& s2 = triplet_members(family, 2);
    const auto& s3 = triplet_members(family, 3);
    for (std::size_t i = 1; i <= s1.size(); ++i) {
      for (std::size_t j = 1; j <= s2.size(); ++j) {
        for (std::size_t k = 1; k <= s3.size(); ++k) {
          FormulaEntry t = make_triplet({family, static_cast<int>(i)}, {family, static_cast<int>(j)},
                                        {family, static_cast<int>(k)});
          if (!find(t.id)) add(std::move(t));
        }
      }
    }
  }
}

void FormulaCatalog::add(FormulaEntry entry) {
  if (entry.id.empty()) throw CatalogDefect("empty formula id");
  if (entries_.count(entry.id)) throw CatalogDefect("duplicate formula id " + entry.id);
  if (!entry.det || !entry.adjugate) throw CatalogDefect(entry.id + ": missing expression");
  ExprPtr stripped = strip_leading_input(entry.det);
  if (!stripped || flatten(stripped)->text() != flatten(entry.adjugate)->text()) {
    throw CatalogDefect(entry.id + ": adjugate is not the det expression without its leading A");
  }
  if (entry.kind == FormulaKind::general && entry.det->uses_vector()) {
    throw CatalogDefect(entry.id + ": general formula uses the auxiliary vector v");
  }
  std::string id = entry.id;
  entries_.emplace(std::move(id), std::move(entry));
}

const FormulaEntry& FormulaCatalog::at(std::string_view id) const {
  if (const FormulaEntry* e = find(id)) return *e;
  throw UnknownFormula("unknown formula id '" + std::string(id) + "'");
}

const FormulaEntry* FormulaCatalog::find(std::string_view id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

const FormulaEntry& FormulaCatalog::default_for(int n) const {
  auto it = defaults_.find(n);
  if (it == defaults_.end()) throw UnknownFormula("no default formula for n=" + std::to_string(n));
  return at(it->second);
}

const FormulaEntry& FormulaCatalog::even_for(int n) const {
  for (const FormulaEntry* e : entries(n, FormulaKind::even)) return *e;
  throw UnknownFormula("no even-subalgebra formula for n=" + std::to_string(n));
}

std::vector<const FormulaEntry*> FormulaCatalog::entries(int n, FormulaKind kind) const {
  std::vector<const FormulaEntry*> out;
  for (const auto& [id, e] : entries_) {
    if (e.dim == n && e.kind == kind) out.push_back(&e);
  }
  return out;
}

const std::vector<FormulaEntry>& FormulaCatalog::triplet_members(char family, int set) const {
  auto it = members_.find(member_key(family, set));
  if (it == members_.end()) {
    throw std::out_of_range("no triplet member set " + member_key(family, set));
  }
  return it->second;
}

std::string triplet_id(TripletTerm a, TripletTerm b, TripletTerm c) {
  return std::string("n6.t.") + a.family + "." + std::to_string(a.index) + "." +
         std::to_string(b.index) + "." + std::to_string(c.index);
}

FormulaEntry FormulaCatalog::make_triplet(TripletTerm a, TripletTerm b, TripletTerm c) const {
  if (a.family != b.family || b.family != c.family) {
    throw std::invalid_argument("triplet terms must all come from family S or all from family T");
  }
  if (a.family != 'S' && a.family != 'T') {
    throw std::invalid_argument(std::string("unknown triplet family '") + a.family + "'");
  }
  const TripletTerm terms[] = {a, b, c};
  std::vector<std::pair<Rational, ExprPtr>> det_terms;
  std::vector<std::pair<Rational, ExprPtr>> adj_terms;
  std::string provenance = "n6-triplet";
  for (int set = 1; set <= 3; ++set) {
    const auto& members = triplet_members(a.family, set);
    const int index = terms[set - 1].index;
    if (index < 1 || index > static_cast<int>(members.size())) {
      throw std::out_of_range("triplet index " + std::to_string(index) + " outside " +
                              member_key(a.family, set));
    }
    const FormulaEntry& m = members[index - 1];
    det_terms.emplace_back(Rational(1, 3), m.det);
    adj_terms.emplace_back(Rational(1, 3), m.adjugate);
    provenance += " " + member_key(a.family, set) + "[" + std::to_string(index) + "]";
  }
  FormulaEntry e;
  e.id = triplet_id(a, b, c);
  e.dim = 6;
  e.det = Expr::weighted_sum(std::move(det_terms));
  e.adjugate = Expr::weighted_sum(std::move(adj_terms));
  e.provenance = std::move(provenance);
  return e;
}

}  // namespace clifinv
