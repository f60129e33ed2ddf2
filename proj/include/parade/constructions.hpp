#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parade/charted.hpp"
#include "parade/geometry.hpp"
#include "parade/group_table.hpp"

namespace parade {

// Wedge sum of groups: disjoint union with all units identified; words never
// mix summands.
ChartedPtr wedge(const std::vector<GroupTable>& summands);

// Where each wedge element came from: (summand, group element), unit = (-1,0).
struct WedgeIndex {
  std::vector<std::pair<int, int>> origin;
  std::vector<std::vector<ElemId>> embed;  // embed[summand][group elem] -> wedge elem
};
ChartedPtr wedge_indexed(const std::vector<GroupTable>& summands, WedgeIndex* index);

// Union of two subgroups inside an ambient group, with words G+^n u G-^n.
ChartedPtr union_in_ambient(const GroupTable& g0, const std::vector<int>& plus,
                            const std::vector<int>& minus);

// Partial group of vector parades generated by a finite point set.
struct VectorParades {
  ChartedPtr pg;
  std::vector<QVector> points;       // chart i <-> points[i]
  std::vector<QVector> differences;  // element e <-> differences[e]

  std::optional<ElemId> find(const QVector& v) const;
};
VectorParades vector_parades(const std::vector<QVector>& pts);

// Symmetry partial group of a figure: charts are the components, elements are
// the deduplicated maps between components, products are ambient composition.
struct ParadeGroup {
  ChartedPtr pg;
  Figure figure;
  TransformClass cls = TransformClass::Euclidean;
  bool field_escape = false;

  std::optional<ElemId> find(const Similarity& g) const { return pg->find_ambient_sim(g); }
};
ParadeGroup parade_from_figure(const Figure& figure, TransformClass cls);

// Parade partial group of a group action: charts = X, elements = every group
// element appearing in a length-1 parade.
ChartedPtr parade_from_group_action(const GroupTable& g0,
                                    const std::vector<std::vector<int>>& action,
                                    const std::vector<int>& x_subset,
                                    const std::vector<std::string>& x0_names = {});

// action[x][a] = a^-1 x a on the group itself.
std::vector<std::vector<int>> adjoint_action_table(const GroupTable& g);

// Abstract multiplication table of a finite set of similarities closed under
// composition and inverse (e.g. a component stabilizer).
GroupTable group_table_from_sims(const std::vector<Similarity>& sims, const std::string& name);

// Union of two similarity groups as a charted realization with charts "0","1",
// ambient transforms attached; words are chains inside one chart.
ChartedPtr union_of_similarity_groups(const std::vector<Similarity>& g0,
                                      const std::vector<Similarity>& g1);

}  // namespace parade
