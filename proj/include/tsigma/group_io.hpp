#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsigma/errors.hpp"
#include "tsigma/group.hpp"

namespace tsigma {

/// Group file format:
///   {"name": string, "degree": int, "generators": [[int, ...], ...]}
/// with 0-based image sequences; every generator must be a permutation.
inline FiniteGroup ingest_group_file(const std::string& path,
                                     int cap = kDefaultGroupCap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file \"" + path + "\"");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("group file \"" + path + "\": " + e.what());
  }
  if (!doc.is_object())
    throw ParseError("group file \"" + path + "\": top level must be an object");
  if (!doc.contains("name") || !doc["name"].is_string())
    throw ParseError("group file \"" + path + "\": field \"name\" must be a string");
  if (!doc.contains("degree") || !doc["degree"].is_number_integer() ||
      doc["degree"].get<int>() < 1)
    throw ParseError("group file \"" + path +
                     "\": field \"degree\" must be a positive integer");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw ParseError("group file \"" + path +
                     "\": field \"generators\" must be an array of image lists");

  int degree = doc["degree"].get<int>();
  std::vector<Perm> gens;
  for (std::size_t k = 0; k < doc["generators"].size(); ++k) {
    const auto& row = doc["generators"][k];
    if (!row.is_array())
      throw ParseError("group file \"" + path + "\": generator #" +
                       std::to_string(k) + " must be an array");
    Perm p;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<int>() < 0)
        throw ParseError("group file \"" + path + "\": generator #" +
                         std::to_string(k) + " has a non-index entry");
      p.images.push_back(std::uint16_t(v.get<int>()));
    }
    if (p.degree() != degree || !p.is_valid())
      throw ValidationError("group file \"" + path + "\": generator #" +
                            std::to_string(k) + " is not a permutation of " +
                            std::to_string(degree) + " points");
    gens.push_back(std::move(p));
  }
  return build_from_generators(degree, gens, doc["name"].get<std::string>(), cap);
}

}  // namespace tsigma
