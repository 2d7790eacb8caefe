#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "clifinv/formula.hpp"

namespace clifinv {

enum class FormulaStatus { verified, unverified };
enum class FormulaKind { general, even };

std::string_view to_string(FormulaStatus status);

// A determinant-norm expression and its adjugate. The adjugate is the det
// expression with the leading input factor removed, so A * adjugate = det.
struct FormulaEntry {
  std::string id;
  int dim = 0;
  ExprPtr det;
  ExprPtr adjugate;
  std::string provenance;
  FormulaStatus status = FormulaStatus::verified;
  FormulaKind kind = FormulaKind::general;
};

// Triplet families: one member from each of the sets 1, 2, 3 of family S
// (4 members each) or family T (2 members each).
struct TripletTerm {
  char family = 'S';
  int index = 1;  // 1-based within its set
};

// Immutable after loading. Catalog text format, one item per line:
//   id | n | det | adjugate | provenance | status
//   @let NAME = expr        abbreviation for the lines that follow
//   @default n id           default formula for dimension n
//   @kind general|even      kind of the entries that follow (per file)
//   @member S1 = det | adj  triplet member term
//   # comment
class FormulaCatalog {
 public:
  // The catalog compiled into the library.
  static const FormulaCatalog& builtin();

  // Reads every *.cat file of a directory, in file-name order.
  static FormulaCatalog load_directory(const std::filesystem::path& dir);

  // Parses one catalog file; `source` names it in error messages. Finalize
  // afterwards to validate defaults and generate the triplet entries.
  void load_text(std::string_view text, std::string_view source);
  void finalize();

  // Throws CatalogDefect if the det/adjugate shapes disagree or the id is
  // taken.
  void add(FormulaEntry entry);

  const FormulaEntry& at(std::string_view id) const;
  const FormulaEntry* find(std::string_view id) const;
  const FormulaEntry& default_for(int n) const;
  const FormulaEntry& even_for(int n) const;

  // Entries of one dimension and kind, ordered by id.
  std::vector<const FormulaEntry*> entries(int n, FormulaKind kind = FormulaKind::general) const;
  std::size_t size() const { return entries_.size(); }

  const std::vector<FormulaEntry>& triplet_members(char family, int set) const;
  FormulaEntry make_triplet(TripletTerm a, TripletTerm b, TripletTerm c) const;

 private:
  std::map<std::string, FormulaEntry, std::less<>> entries_;
  std::map<int, std::string> defaults_;
  std::map<std::string, std::vector<FormulaEntry>, std::less<>> members_;
};

std::string triplet_id(TripletTerm a, TripletTerm b, TripletTerm c);

}  // namespace clifinv
