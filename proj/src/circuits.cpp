#include "circmin/circuits.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace circmin {

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Circle: return "circle";
    case BlockKind::Cross: return "cross";
    case BlockKind::Bullet: return "bullet";
  }
  return "?";
}

std::vector<int> Circuit::sorted_vertices() const {
  std::vector<int> v = vertices;
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

std::string arc_text(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + " " +
         std::string(to_string(a.kind)) + ")";
}

}  // namespace

Circuit validate_circuit(const ArcDigraph& d, const std::vector<Arc>& given) {
  if (given.empty()) {
    throw DomainError(ErrorCode::NotClosed, "empty arc sequence");
  }
  Circuit c;
  c.arcs.reserve(given.size());
  for (const Arc& raw : given) {
    auto found = d.find_arc(raw.tail, raw.head, raw.kind);
    if (!found) {
      throw DomainError(ErrorCode::UnknownArc,
                        "arc " + arc_text(raw) + " is not in the digraph");
    }
    c.arcs.push_back(*found);  // picks up the resolved row index
  }

  long total = 0;
  std::vector<char> seen(d.ground().size() + 1, 0);
  for (std::size_t t = 0; t < c.arcs.size(); ++t) {
    const Arc& a = c.arcs[t];
    const Arc& next = c.arcs[(t + 1) % c.arcs.size()];
    if (a.head != next.tail) {
      throw DomainError(ErrorCode::NotClosed,
                        "arc " + arc_text(a) + " is not followed by an arc "
                        "leaving vertex " + std::to_string(a.head));
    }
    if (seen[a.tail]) {
      throw DomainError(ErrorCode::RepeatedVertex,
                        "vertex " + std::to_string(a.tail) + " visited twice");
    }
    seen[a.tail] = 1;
    c.vertices.push_back(a.tail);
    total += d.signed_length(a);
    if (a.kind == ArcKind::Row) ++c.row_arc_count;
    if (a.kind == ArcKind::Long) ++c.long_arc_count;
  }

  int n = d.ground().size();
  if (total % n != 0) {
    throw DomainError(ErrorCode::VerificationFailed,
                      "signed lengths of a closed walk must sum to a "
                      "multiple of n");
  }
  c.winding = static_cast<int>(total / n);
  if (d.flavor() != DigraphFlavor::Jump) {
    if (c.winding <= 0) {
      throw DomainError(ErrorCode::ZeroWinding,
                        "winding number " + std::to_string(c.winding) +
                            " is not positive");
    }
    if (c.row_arc_count == 0) {
      throw DomainError(ErrorCode::NoRowArc, "circuit has no row arc");
    }
    if (std::gcd(c.row_arc_count, c.winding) != 1) {
      throw DomainError(ErrorCode::VerificationFailed,
                        "simple circuit with gcd(row arcs, winding) != 1");
    }
  }
  return c;
}

Circuit circuit_from_vertices(const ArcDigraph& d,
                              const std::vector<int>& vertices) {
  if (vertices.size() < 2) {
    throw DomainError(ErrorCode::NotClosed, "vertex sequence too short");
  }
  std::vector<int> seq = vertices;
  if (seq.front() == seq.back()) seq.pop_back();
  std::vector<Arc> arcs;
  arcs.reserve(seq.size());
  for (std::size_t t = 0; t < seq.size(); ++t) {
    int u = seq[t];
    int v = seq[(t + 1) % seq.size()];
    auto candidates = d.find_arcs(u, v);
    if (candidates.empty()) {
      throw DomainError(ErrorCode::UnknownArc,
                        "no arc from " + std::to_string(u) + " to " +
                            std::to_string(v));
    }
    if (candidates.size() > 1) {
      std::string kinds;
      for (const Arc& a : candidates) {
        if (!kinds.empty()) kinds += ", ";
        kinds += to_string(a.kind);
      }
      throw DomainError(ErrorCode::AmbiguousStep,
                        "step " + std::to_string(u) + " -> " +
                            std::to_string(v) + " matches kinds {" + kinds +
                            "}; spell the circuit as explicit arcs");
    }
    arcs.push_back(candidates.front());
  }
  return validate_circuit(d, arcs);
}

namespace {

enum class VertexClass : char { BulletClass, CircleClass, CrossClass };

/// Per-member classification used for blocks and bad arcs; the pooled view
/// is the union over members.
struct MemberClasses {
  std::vector<VertexClass> cls;      // size n+1, member-local classes
  std::vector<char> on_circuit;     // size n+1
  std::vector<int> essential;       // ascending
};

MemberClasses member_classes(const GroundSet& g, const Circuit& c) {
  MemberClasses mc;
  mc.cls.assign(g.size() + 1, VertexClass::BulletClass);
  mc.on_circuit.assign(g.size() + 1, 0);
  for (const Arc& a : c.arcs) {
    mc.on_circuit[a.tail] = 1;
    if (a.kind == ArcKind::Forward) mc.cls[a.head] = VertexClass::CircleClass;
    if (a.kind == ArcKind::Reverse) mc.cls[a.tail] = VertexClass::CrossClass;
  }
  for (int v = 1; v <= g.size(); ++v) {
    if (mc.on_circuit[v] && mc.cls[v] == VertexClass::BulletClass) {
      mc.essential.push_back(v);
    }
  }
  return mc;
}

std::vector<Block> member_blocks(const GroundSet& g, const MemberClasses& mc,
                                 int member) {
  std::vector<Block> blocks;
  for (int b : mc.essential) {
    Block blk;
    blk.bullet = b;
    blk.member = member;
    int t = 1;
    VertexClass run = VertexClass::BulletClass;
    for (; t <= g.size(); ++t) {
      int x = g.add(b, t);
      VertexClass cx = mc.cls[x];
      if (cx == VertexClass::BulletClass) break;
      if (run == VertexClass::BulletClass) {
        run = cx;
      } else if (cx != run) {
        throw DomainError(ErrorCode::BlockStructureViolation,
                          "block at bullet " + std::to_string(b) +
                              " mixes circles and crosses");
      }
    }
    blk.end = g.add(b, t - 1);
    if (t == 1) {
      blk.kind = BlockKind::Bullet;
      blk.leave_tail = b;
      blk.enter_head = b;
    } else if (run == VertexClass::CircleClass) {
      blk.kind = BlockKind::Circle;
      blk.leave_tail = blk.end;
      blk.enter_head = b;
    } else {
      blk.kind = BlockKind::Cross;
      blk.leave_tail = b;
      blk.enter_head = blk.end;
    }
    blocks.push_back(blk);
  }
  return blocks;
}

Classification classify_impl(const GroundSet& g,
                             std::span<const Circuit> circuits) {
  Classification cl;
  std::vector<char> circle(g.size() + 1, 0), cross(g.size() + 1, 0),
      essential(g.size() + 1, 0);
  for (std::size_t m = 0; m < circuits.size(); ++m) {
    MemberClasses mc = member_classes(g, circuits[m]);
    for (int v = 1; v <= g.size(); ++v) {
      if (mc.cls[v] == VertexClass::CircleClass) circle[v] = 1;
      if (mc.cls[v] == VertexClass::CrossClass) cross[v] = 1;
    }
    for (int b : mc.essential) essential[b] = 1;
    auto blocks = member_blocks(g, mc, static_cast<int>(m));
    cl.blocks.insert(cl.blocks.end(), blocks.begin(), blocks.end());
  }
  for (int v = 1; v <= g.size(); ++v) {
    if (circle[v]) {
      cl.circles.push_back(v);
    } else if (cross[v]) {
      cl.crosses.push_back(v);
    } else {
      cl.bullets.push_back(v);
    }
    if (essential[v]) cl.essential_bullets.push_back(v);
  }
  std::sort(cl.blocks.begin(), cl.blocks.end(),
            [](const Block& a, const Block& b) { return a.bullet < b.bullet; });
  return cl;
}

}  // namespace

Classification classify(const GroundSet& g, const Circuit& c) {
  return classify_impl(g, std::span<const Circuit>(&c, 1));
}

Classification classify(const GroundSet& g,
                         std::span<const Circuit> circuits) {
  return classify_impl(g, circuits);
}

CircuitFamily validate_family(const ArcDigraph& d,
                              std::vector<Circuit> circuits) {
  if (circuits.empty()) {
    throw DomainError(ErrorCode::ParameterOutOfRange, "empty circuit family");
  }
  const GroundSet& g = d.ground();

  std::vector<char> used(g.size() + 1, 0);
  for (const Circuit& c : circuits) {
    for (int v : c.vertices) {
      if (used[v]) {
        throw DomainError(ErrorCode::Overlap,
                          "vertex " + std::to_string(v) +
                              " belongs to two circuits");
      }
      used[v] = 1;
    }
  }

  const Circuit& first = circuits.front();
  for (const Circuit& c : circuits) {
    if (c.row_arc_count != first.row_arc_count || c.winding != first.winding ||
        c.long_arc_count != first.long_arc_count) {
      throw DomainError(ErrorCode::NonUniformParameters,
                        "family members disagree on row arcs or winding");
    }
  }

  CircuitFamily f;
  f.circuits = std::move(circuits);
  for (const Circuit& c : f.circuits) {
    f.row_arc_total += c.row_arc_count;
    f.winding_total += c.winding;
  }
  f.classes = classify(g, std::span<const Circuit>(f.circuits));

  if (d.flavor() != DigraphFlavor::Jump) {
    if (std::gcd(f.row_arc_total, f.winding_total) != f.size()) {
      throw DomainError(ErrorCode::VerificationFailed,
                        "family size differs from gcd of pooled parameters");
    }
    // Every row arc of the family jumps exactly the pooled winding number of
    // essential bullets, and no two row arcs jump the same set.
    std::vector<std::vector<int>> jump_sets;
    for (const Circuit& c : f.circuits) {
      for (const Arc& a : c.arcs) {
        if (a.kind != ArcKind::Row) continue;
        auto js = d.jumped(a, f.classes.essential_bullets);
        if (static_cast<int>(js.size()) != f.winding_total) {
          throw DomainError(
              ErrorCode::JumpCountViolation,
              "row arc " + arc_text(a) + " jumps " +
                  std::to_string(js.size()) + " pooled essential bullets, "
                  "expected " + std::to_string(f.winding_total));
        }
        jump_sets.push_back(std::move(js));
      }
    }
    // With pooled winding equal to the bullet count every window is the full
    // set, so distinctness is only meaningful below that.
    if (f.winding_total < f.row_arc_total) {
      std::sort(jump_sets.begin(), jump_sets.end());
      if (std::adjacent_find(jump_sets.begin(), jump_sets.end()) !=
          jump_sets.end()) {
        throw DomainError(ErrorCode::JumpSetCollision,
                          "two row arcs jump the same essential-bullet set");
      }
    }
  }
  return f;
}

namespace {

std::vector<BadArc> bad_arcs_impl(const ArcDigraph& d,
                                  std::span<const Circuit> circuits) {
  const GroundSet& g = d.ground();
  std::vector<BadArc> out;
  std::vector<MemberClasses> classes;
  classes.reserve(circuits.size());
  for (const Circuit& c : circuits) classes.push_back(member_classes(g, c));

  for (const Arc& ra : d.row_arcs()) {
    for (std::size_t m = 0; m < circuits.size(); ++m) {
      int p = circuits[m].winding;
      auto js = d.jumped(ra, classes[m].essential);
      int count = static_cast<int>(js.size());
      if (count < p - 1 || count > p + 1) {
        throw DomainError(ErrorCode::JumpCountViolation,
                          "row arc " + arc_text(ra) + " jumps " +
                              std::to_string(count) +
                              " essential bullets of a circuit with winding " +
                              std::to_string(p));
      }
      if (count == p - 1) {
        out.push_back({ra, static_cast<int>(m), count});
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<BadArc> bad_arcs(const ArcDigraph& d, const CircuitFamily& f) {
  return bad_arcs_impl(d, std::span<const Circuit>(f.circuits));
}

std::vector<BadArc> bad_arcs(const ArcDigraph& d, const Circuit& c) {
  return bad_arcs_impl(d, std::span<const Circuit>(&c, 1));
}

}  // namespace circmin
