#pragma once

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

#include "hstar/io.hpp"

namespace hstar::fixtures {

struct CorpusEntry {
  std::string name;
  Polytope polytope;
  std::vector<std::string> tags;

  bool has(const std::string& tag) const { return std::find(tags.begin(), tags.end(), tag) != tags.end(); }
};

inline std::vector<CorpusEntry> load_corpus(const std::string& path = std::string(HSTAR_TEST_DATA) + "/corpus.json") {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const Json j = Json::parse(in);
  std::vector<CorpusEntry> out;
  for (const auto& e : j.at("polytopes")) {
    out.push_back({e.at("name").get<std::string>(), parse_polytope(e), e.at("tags").get<std::vector<std::string>>()});
  }
  return out;
}

}  // namespace hstar::fixtures
