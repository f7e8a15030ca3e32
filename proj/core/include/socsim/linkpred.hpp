#ifndef SOCSIM_LINKPRED_HPP_
#define SOCSIM_LINKPRED_HPP_

#include <set>
#include <vector>

#include "socsim/relation.hpp"

namespace socsim {

enum class LinkModel { CommonNeighbours, AdamicAdar, PreferentialAttachment, Foaf };
const char* to_string(LinkModel model);
std::optional<LinkModel> parse_link_model(const std::string& name);

enum class CandidatePolicy { Foaf, AllNonEdges };

/// Scored non-edge. Pairs are unordered; u < v lexicographically.
struct CandidatePair {
    EntityId u;
    EntityId v;
    double score = 0.0;
    LinkModel model = LinkModel::CommonNeighbours;
};

/// Nodes at hop distance exactly two from u on the symmetrized graph.
/// Throws UnknownEntity.
std::set<EntityId> foaf_candidates(const RelationGraph& g, const EntityId& u);

/// |common neighbours| on the symmetrized graph.
double score_cn(const RelationGraph& g, const EntityId& u, const EntityId& v);

/// sum over common neighbours z of 1/ln(deg(z)); a common neighbour always
/// has degree >= 2, so the log never vanishes.
double score_aa(const RelationGraph& g, const EntityId& u, const EntityId& v);

/// deg(u) * deg(v) on the symmetrized graph.
double score_pa(const RelationGraph& g, const EntityId& u, const EntityId& v);

/// Top-k non-edges by model score; ordered by (score desc, pair lex asc).
/// The FOAF model scores every two-hop pair 1 and orders ties by common
/// neighbour count so the ranking stays well-defined.
std::vector<CandidatePair> predict_topk(const RelationGraph& g, LinkModel model, std::size_t k,
                                        CandidatePolicy policy = CandidatePolicy::Foaf);

/// Unordered pair set, normalized to u < v.
using EdgeSet = std::set<std::pair<EntityId, EntityId>>;

struct PredictionQuality {
    double precision_at_k = 0.0;
    double recall_at_k = 0.0;
};

/// Precision/recall of the top-k list against edges that appeared later.
/// Throws EmptyTestSet.
PredictionQuality evaluate_prediction(const RelationGraph& g_train, const EdgeSet& new_edges,
                                      LinkModel model, std::size_t k,
                                      CandidatePolicy policy = CandidatePolicy::Foaf);

} // namespace socsim

#endif
