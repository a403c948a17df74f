#pragma once

#include <memory>
#include <string>
#include <vector>

#include "khv/complex.hpp"
#include "khv/diagram.hpp"
#include "khv/theories.hpp"

namespace khv {

// Elementary diagrammatic moves. Crossings are never touched, so the cube
// vertices of every intermediate diagram correspond one to one.
//   zero_handle: births a free loop (appended last); the unit map.
//   one_handle:  band between two marked points; merge or split per vertex.
//                p1 == p2 means two points on that edge or loop.
//   two_handle:  caps off the free loop p1; the counit map.
//   dot:         multiplication by X on the circle through p1.
//   loop_shuffle: planar isotopy renumbering the free loops; loop_perm[old]
//                gives the new index.
struct Move {
  enum class Kind { zero_handle, one_handle, two_handle, dot, loop_shuffle };
  Kind kind;
  Basepoint p1, p2;
  std::vector<int> loop_perm;

  static Move zero_handle() { return {Kind::zero_handle, {}, {}, {}}; }
  static Move one_handle(Basepoint a, Basepoint b) { return {Kind::one_handle, a, b, {}}; }
  static Move two_handle(int loop) { return {Kind::two_handle, Basepoint::loop(loop), {}, {}}; }
  static Move dot(Basepoint a) { return {Kind::dot, a, {}, {}}; }
  static Move loop_shuffle(std::vector<int> perm) {
    return {Kind::loop_shuffle, {}, {}, std::move(perm)};
  }

  std::string str() const;
};

struct CobordismWord {
  PlanarDiagram source;
  PlanarDiagram target;
  std::vector<Move> moves;

  std::string move_list_text() const;
  static CobordismWord from_move_list_text(const std::string& text);
};

// The diagram obtained by surgery along a band between two marked points.
PlanarDiagram one_handle_surgery(const PlanarDiagram& d, const Basepoint& p1,
                                 const Basepoint& p2);

struct EvaluatedCobordism {
  std::unique_ptr<TheoryComplex> src;
  std::unique_ptr<TheoryComplex> tgt;
  std::vector<std::vector<std::int32_t>> cols;

  ChainMap map() const;
  F2Matrix dense() const { return map().dense(); }
};

// Composes the elementary maps of the word, checks the final diagram matches
// the declared target, and checks the composite is a chain map.
EvaluatedCobordism evaluate(const CobordismWord& w, const TheorySpec& t,
                            int cap = kDefaultCrossingCap);

enum class RelationKind { four_tu, neck_cutting, dot_migration, cancel };

// points: four_tu: 4 free loops; neck_cutting: 1 free loop;
// dot_migration: 2 points on one strand component; cancel: 1 point.
struct RelationInstance {
  PlanarDiagram host;
  std::vector<Basepoint> points;
};

struct RelationReport {
  std::string name;
  bool pass = false;
  std::string detail;
};

RelationReport check_relation(RelationKind kind, const RelationInstance& inst,
                              const TheorySpec& t, int cap = kDefaultCrossingCap);

}  // namespace khv
