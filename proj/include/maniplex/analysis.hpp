#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "maniplex/string_rep.hpp"

namespace maniplex {

// Class of a rank-4 representation over PSL, by whether the vertex group G_0
// and facet group G_3 are the full group or a proper S4/A5. None covers
// everything outside the trichotomy's scope (rank != 4 or PGL contexts).
enum class ClassTag : uint8_t { Class1, Class2, Class3, None };

std::string to_string(ClassTag tag);

struct ManiplexSummary {
  uint32_t q = 0;
  Family family = Family::PSL;
  uint32_t rank = 0;
  std::vector<uint32_t> type;
  uint64_t flag_count = 0;
  std::vector<uint64_t> face_counts;  // [G : G_i]
  bool orientable = false;
  SubgroupKind vertex_kind, facet_kind;  // G_0 and G_{n-1}
  ClassTag class_tag = ClassTag::None;
  bool ip = false;
};

// Number of i-faces, the index [G : G_i].
uint64_t face_count(const StringRep& rep, uint32_t i);

// Orientable iff the rotation subgroup (generated by the pairwise products
// of the generators) has index 2; it always has index at most 2.
bool orientable(const StringRep& rep);

ClassTag classify(const StringRep& rep);

ManiplexSummary summarize(const StringRep& rep);

// Debug export of the explicit flag adjacency graph, one line "i u v" per
// i-adjacent flag pair, flags numbered by group table index. Small q only.
void write_flag_graph(const StringRep& rep, std::ostream& out);

}  // namespace maniplex
