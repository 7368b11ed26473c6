#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace twosym {

using Vertex = std::uint32_t;
using Colour = int;

inline constexpr int kColourCount = 4;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subset of the four colours {0,1,2,3}, stored as a bitmask.
class ColourSet {
 public:
  constexpr ColourSet() = default;
  constexpr ColourSet(std::initializer_list<Colour> colours) {
    for (Colour c : colours) bits_ |= static_cast<std::uint8_t>(1u << c);
  }
  static constexpr ColourSet all() { return ColourSet{0, 1, 2, 3}; }
  static constexpr ColourSet from_bits(std::uint8_t bits) {
    ColourSet s;
    s.bits_ = bits & 0xF;
    return s;
  }

  constexpr bool contains(Colour c) const { return (bits_ >> c) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    int n = 0;
    for (Colour c = 0; c < kColourCount; ++c) n += contains(c);
    return n;
  }
  constexpr ColourSet complement() const { return from_bits(static_cast<std::uint8_t>(~bits_)); }
  constexpr ColourSet without(Colour c) const {
    return from_bits(static_cast<std::uint8_t>(bits_ & ~(1u << c)));
  }
  constexpr std::uint8_t bits() const { return bits_; }

  std::vector<Colour> colours() const {
    std::vector<Colour> out;
    for (Colour c = 0; c < kColourCount; ++c)
      if (contains(c)) out.push_back(c);
    return out;
  }

  friend constexpr bool operator==(ColourSet, ColourSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Colour set of the "hat" residues: every colour except `c`.
constexpr ColourSet hat(Colour c) { return ColourSet::all().without(c); }

/// Coordinate label (i, j) of a vertex of a 6-tuple graph.
struct GridLabel {
  int residue = 0;
  int index = 0;
  friend bool operator==(const GridLabel&, const GridLabel&) = default;
};

/// Tag naming a vertex inserted by surgery (e.g. "v'3").
struct TagLabel {
  std::string name;
  friend bool operator==(const TagLabel&, const TagLabel&) = default;
};

using VertexLabel = std::variant<std::monostate, GridLabel, TagLabel>;

std::string to_string(const VertexLabel& label);

using Involution = std::vector<Vertex>;

/// A 4-coloured graph without boundary. Each colour is a fixed-point-free
/// involution on the vertex set; multiple edges are allowed, loops are not.
class ColouredGraph {
 public:
  ColouredGraph() = default;
  /// Throws GraphError unless every involution is total, self-inverse and
  /// fixed-point-free over the same vertex count.
  explicit ColouredGraph(std::array<Involution, kColourCount> involutions,
                         std::vector<VertexLabel> labels = {});

  std::size_t vertex_count() const { return involutions_[0].size(); }
  Vertex neighbour(Colour c, Vertex v) const { return involutions_[c][v]; }
  std::span<const Vertex> involution(Colour c) const { return involutions_[c]; }
  const std::array<Involution, kColourCount>& involutions() const { return involutions_; }

  const VertexLabel& label(Vertex v) const { return labels_[v]; }
  const std::vector<VertexLabel>& labels() const { return labels_; }

  /// First vertex carrying `label`, if any.
  std::optional<Vertex> find_label(const VertexLabel& label) const;

 private:
  std::array<Involution, kColourCount> involutions_;
  std::vector<VertexLabel> labels_;
};

/// Connected components of the subgraph keeping only `colours`.
struct ResiduePartition {
  ColourSet colours;
  std::vector<std::size_t> class_of;
  /// For two-colour sets each class lists its cycle in traversal order,
  /// alternating the two involutions starting with the smaller colour.
  std::vector<std::vector<Vertex>> classes;

  std::size_t count() const { return classes.size(); }
};

ResiduePartition residues(const ColouredGraph& g, ColourSet colours);
std::size_t residue_count(const ColouredGraph& g, ColourSet colours);

bool is_connected(const ColouredGraph& g);

/// Two-colouring with every edge crossing classes (class of v is 0 or 1),
/// or nullopt when the graph has an odd cycle.
std::optional<std::vector<int>> is_bipartite(const ColouredGraph& g);

/// Every 3-residue has Euler characteristic 2 (represents a 2-sphere).
bool is_gem(const ColouredGraph& g);

/// Every hat-c subgraph is connected.
bool is_contracted(const ColouredGraph& g);

/// Colour-preserving isomorphism g1 -> g2 as a vertex map, if one exists.
/// Requires g1 connected; the image of vertex 0 is tried against every vertex
/// of g2 and the rest of the map is forced colour by colour.
std::optional<std::vector<Vertex>> cp_isomorphic(const ColouredGraph& g1,
                                                 const ColouredGraph& g2);

/// The colour relabellings that keep the pairs {0,1} and {2,3} in place:
/// identity, 0<->1, 2<->3 and both. `perm[c]` is the new colour of c.
inline constexpr std::array<std::array<Colour, 4>, 4> kPairSwaps{
    {{0, 1, 2, 3}, {1, 0, 2, 3}, {0, 1, 3, 2}, {1, 0, 3, 2}}};

/// g with every c-edge recoloured perm[c]; perm must be a permutation.
ColouredGraph permute_colours(const ColouredGraph& g, const std::array<Colour, 4>& perm);

struct SwapIsomorphism {
  std::array<Colour, 4> colours;
  std::vector<Vertex> vertices;
  bool strict() const { return colours == kPairSwaps[0]; }
};

/// An isomorphism g1 -> permute_colours(g2, s) for the first s in kPairSwaps
/// that admits one (so a colour-preserving one is preferred).
std::optional<SwapIsomorphism> isomorphic_up_to_swaps(const ColouredGraph& g1,
                                                      const ColouredGraph& g2);

/// Euler characteristic V - E + F of the regular embedding induced by the
/// cyclic colour order `order` (a permutation of 0..3).
int embedding_euler(const ColouredGraph& g, const std::array<Colour, 4>& order);

/// New c-edge a--b joining two survivors whose c-partners were removed.
struct Weld {
  Colour colour;
  Vertex a;
  Vertex b;
};

/// Deletes `removed` and applies `welds`. Survivors keep their relative
/// order, so old index v maps to v minus the number of removed vertices
/// below it (see surviving_index). Every hanging edge must be welded.
ColouredGraph remove_and_weld(const ColouredGraph& g, std::span<const Vertex> removed,
                              std::span<const Weld> welds);

/// Index of a surviving vertex after remove_and_weld; `removed_sorted` must
/// be sorted and must not contain `old_index`.
Vertex surviving_index(Vertex old_index, std::span<const Vertex> removed_sorted);

void write_dot(std::ostream& out, const ColouredGraph& g, const std::string& name = "gem");
std::string to_dot(const ColouredGraph& g, const std::string& name = "gem");

}  // namespace twosym
