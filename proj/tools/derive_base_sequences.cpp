// Searches shortest link sequences from each standard polygon to its image
// under T and U and prints them as the base_sequences.hpp header.
#include "fanoweb/web.hpp"

#include <iostream>

using namespace fanoweb;

int main(int argc, char** argv) {
  int box = argc > 1 ? std::stoi(argv[1]) : 3;
  json table = json::object();
  for (Generator X : {Generator::T, Generator::U})
    for (int index : {-1, 0, 1, 2}) {
      const PolytopeClass cls = standard_class(index);
      const FiberedSet start = standard_fibered(index);
      const FiberedSet goal = conjugate(generator_map(X), start);
      auto seq = bfs_links({start}, [&](const FiberedSet& f) { return f == goal; }, cls, box);
      const std::string key = to_string(X) + ":" + standard_name(index);
      if (!seq) {
        std::cerr << key << ": not found within box " << box << "\n";
        return 2;
      }
      SequenceReport rep = validate_sequence(*seq);
      if (!rep.ok()) {
        std::cerr << key << ": derived sequence does not validate\n";
        return 3;
      }
      std::cerr << key << ": " << seq->steps.size() << " links\n";
      table[key] = {{"box", box}, {"sequence", to_json(*seq)}};
    }
  std::cout << "#pragma once\n\n// Generated by tools/derive_base_sequences. Do not edit by hand.\n\nnamespace fanoweb {\n\n"
            << "inline constexpr const char* kBaseSequencesJson = R\"json(" << table.dump(1) << ")json\";\n\n"
            << "}  // namespace fanoweb\n";
}
