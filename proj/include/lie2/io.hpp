#pragma once

#include "lie2/ext.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <set>

namespace lie2 {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& x);
Rat rat_from_json(const Json& j);

/// Matrices are lists of rows; the expected shape settles empty cases.
Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j, Index rows, Index cols);
Json to_json(const std::vector<RatMatrix>& ms);

Json to_json(const LieAlgebra& L);
Json to_json(const CrossedModule& X);
Json to_json(const TwoVect& t);
/// xmod and twovect are written inline.
Json to_json(const TwoRep& r);
/// Without the representation.
Json to_json(const ExtensionData& d);
Json to_json(const TrivExtensionData& t);
Json to_json(const Report& r);
Json to_json(const Violation& v);

/// Nonzero values as {p, q, r, key: [[xi], [z]], value}.
Json cochain_dump(const CochainComplex& cx, const TriCochain& w);
Json cochain_dump(const CochainComplex& cx, const TotalCochain& c);
Json to_json(const CochainComplex& cx, const CohomologyGroup& H);
Json sparse_dump(const SparseRatMatrix& m);

/**
 * Named objects read from fixture files. A file holds one object or {"objects": [...]};
 * every object has "kind" and "name" (default: the file stem). References to other
 * objects are names, resolved lazily so files may be loaded in any order.
 */
class Workspace {
 public:
  std::vector<std::string> load_file(const std::filesystem::path& path);
  void load_dir(const std::filesystem::path& dir);
  std::vector<std::string> add(const Json& j, const std::string& default_name = "");

  bool contains(const std::string& name) const { return raw_.count(name) > 0; }
  std::string kind(const std::string& name) const;
  std::vector<std::string> names() const;

  LieAlgebra lie_algebra(const std::string& name) const;
  CrossedModule crossed_module(const std::string& name) const;
  TwoVect two_vect(const std::string& name) const;
  TwoRep two_rep(const std::string& name) const;
  /// rep_override replaces the "rep" reference of the stored data.
  ExtensionData extension_data(const std::string& name, const std::string& rep_override = "") const;
  TrivExtensionData triv_extension_data(const std::string& name) const;

  LieAlgebra lie_algebra(const char* name) const { return lie_algebra(std::string(name)); }
  CrossedModule crossed_module(const char* name) const { return crossed_module(std::string(name)); }
  TwoVect two_vect(const char* name) const { return two_vect(std::string(name)); }
  TwoRep two_rep(const char* name) const { return two_rep(std::string(name)); }

  // Inline objects or references.
  LieAlgebra lie_algebra(const Json& j) const;
  CrossedModule crossed_module(const Json& j) const;
  TwoVect two_vect(const Json& j) const;
  TwoRep two_rep(const Json& j) const;
  ExtensionData extension_data(const Json& j, const TwoRep& rep) const;

 private:
  const Json& lookup(const std::string& name, const std::string& kind) const;

  std::map<std::string, Json> raw_;
  mutable std::set<std::string> resolving_;
};

}  // namespace lie2
