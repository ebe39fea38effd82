#include "walkercount/graph.hpp"

#include <stdexcept>

namespace walkercount {

std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.x()) + "," + std::to_string(v.y()) + ")";
}

void LineGraph::neighbors(const Vertex& v, NeighborList& out) const {
  out.clear();
  out.push(Vertex{v.x() - 1});
  out.push(Vertex{v.x() + 1});
}

void SquareLattice::neighbors(const Vertex& v, NeighborList& out) const {
  out.clear();
  out.push(Vertex{v.x() - 1, v.y()});
  out.push(Vertex{v.x(), v.y() - 1});
  out.push(Vertex{v.x(), v.y() + 1});
  out.push(Vertex{v.x() + 1, v.y()});
}

void CombGraph::neighbors(const Vertex& v, NeighborList& out) const {
  out.clear();
  if (v.y() == 0) {
    out.push(Vertex{v.x() - 1, 0});
    out.push(Vertex{v.x(), 1});
    out.push(Vertex{v.x() + 1, 0});
  } else {
    out.push(Vertex{v.x(), v.y() - 1});
    out.push(Vertex{v.x(), v.y() + 1});
  }
}

std::vector<ModelPtr> builtin_models() {
  return {std::make_shared<LineGraph>(), std::make_shared<SquareLattice>(),
          std::make_shared<CombGraph>()};
}

ModelPtr find_model(std::string_view name) {
  if (name == "z1" || name == "Z") return std::make_shared<LineGraph>();
  if (name == "z2" || name == "Z2") return std::make_shared<SquareLattice>();
  if (name == "comb") return std::make_shared<CombGraph>();
  throw std::invalid_argument("unknown graph model '" + std::string(name) +
                              "' (expected z1, z2 or comb)");
}

}  // namespace walkercount
