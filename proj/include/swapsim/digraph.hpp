#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swapsim {

// Thrown on violated preconditions and malformed inputs.
struct SwapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parties are identified by name; lexicographic order is the canonical
// tie-break order used everywhere determinism matters.
using VertexId = std::string;

struct Arc {
    VertexId head;  // asset moves from head (party) ...
    VertexId tail;  // ... to tail (counterparty)

    auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Arc& a);

// A swap digraph: parties as vertexes, proposed transfers as arcs.
// No self-loops, no duplicate arcs, every endpoint declared.
class Digraph {
public:
    Digraph() = default;
    Digraph(std::vector<VertexId> vertexes, std::vector<Arc> arcs);

    const std::vector<VertexId>& vertexes() const { return vertexes_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_vertex(const VertexId& v) const;
    bool has_arc(const VertexId& u, const VertexId& v) const;
    std::vector<Arc> arcs_entering(const VertexId& v) const;
    std::vector<Arc> arcs_leaving(const VertexId& v) const;

    Digraph transpose() const;

    bool operator==(const Digraph&) const = default;

private:
    std::vector<VertexId> vertexes_;  // sorted, unique
    std::vector<Arc> arcs_;          // sorted, unique
};

inline constexpr std::size_t kMaxAnalysisVertexes = 12;

bool is_strongly_connected(const Digraph& d);

// Longest simple path length u -> v by exhaustive enumeration.
// Returns 0 for u == v (degenerate path), nullopt when v is unreachable.
std::optional<int> longest_path_len(const Digraph& d, const VertexId& u, const VertexId& v,
                                    std::size_t max_vertexes = kMaxAnalysisVertexes);

// Max longest-path length over ordered pairs of distinct vertexes.
// Requires a strongly connected digraph.
int diameter(const Digraph& d, std::size_t max_vertexes = kMaxAnalysisVertexes);

// Like diameter() but tolerates unreachable pairs; used when a run is
// forced on a digraph that fails validation.
int diameter_relaxed(const Digraph& d, std::size_t max_vertexes = kMaxAnalysisVertexes);

bool is_feedback_vertex_set(const Digraph& d, const std::set<VertexId>& l);

// All minimum-cardinality feedback vertex sets, each sorted, list ordered
// lexicographically. Exact subset enumeration; rejects large inputs.
std::vector<std::vector<VertexId>> min_feedback_vertex_sets(
    const Digraph& d, std::size_t max_vertexes = kMaxAnalysisVertexes);

// True iff p is a simple path in d from counterparty to leader, or the
// degenerate path (counterparty) when counterparty == leader. Cyclic
// paths are rejected.
bool is_valid_hashkey_path(const Digraph& d, const std::vector<VertexId>& p,
                           const VertexId& leader, const VertexId& counterparty);

}  // namespace swapsim
