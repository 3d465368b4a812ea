#include "permsym/character.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "permsym/errors.hpp"

namespace permsym {

PhaseHom::PhaseHom(SubgroupPtr group, std::vector<PhaseFraction> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw InvalidInputError("null group");
  if (values_.size() != group_->order())
    throw InvalidInputError("character value map does not match the group order");
}

const PhaseFraction& PhaseHom::value_at(int element_index) const {
  return values_.at(static_cast<std::size_t>(element_index));
}

PhaseFraction PhaseHom::evaluate(const Permutation& g) const {
  const auto idx = group_->index_of(g);
  if (!idx) throw InvalidInputError("permutation is not a member of the character's group");
  return values_[static_cast<std::size_t>(*idx)];
}

bool PhaseHom::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const PhaseFraction& v) { return v.is_one(); });
}

bool PhaseHom::operator==(const PhaseHom& rhs) const {
  return group_->kind() == rhs.group_->kind() && group_->n() == rhs.group_->n() &&
         values_ == rhs.values_;
}

namespace {

// Subgroup generated by the given element indices, closed under products.
std::vector<int> subgroup_closure(const PermSubgroup& G, std::vector<int> seeds) {
  std::vector<bool> in(G.order(), false);
  const int id = *G.index_of(G.identity());
  std::deque<int> todo;
  std::vector<int> members;
  auto add = [&](int i) {
    if (!in[static_cast<std::size_t>(i)]) {
      in[static_cast<std::size_t>(i)] = true;
      members.push_back(i);
      todo.push_back(i);
    }
  };
  add(id);
  for (int s : seeds) add(s);
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop_front();
    for (int s : seeds) {
      const auto& gx = G.elements()[static_cast<std::size_t>(x)];
      const auto& gs = G.elements()[static_cast<std::size_t>(s)];
      add(*G.index_of(gs * gx));
      add(*G.index_of(gx * gs));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Derived subgroup [G, G]: normal closure of the commutators of the group
// generators. Conjugates by generators are folded in until the closure is
// stable.
std::vector<int> derived_subgroup(const PermSubgroup& G) {
  std::vector<int> seeds;
  std::unordered_set<int> seed_set;
  auto push_seed = [&](const Permutation& p) {
    const int idx = *G.index_of(p);
    if (seed_set.insert(idx).second) seeds.push_back(idx);
  };
  for (const auto& a : G.generators())
    for (const auto& b : G.generators())
      push_seed(a * b * a.inverse() * b.inverse());

  std::vector<int> members = subgroup_closure(G, seeds);
  for (;;) {
    bool grew = false;
    for (const auto& g : G.generators()) {
      const Permutation ginv = g.inverse();
      for (int m : members) {
        const Permutation conj = g * G.elements()[static_cast<std::size_t>(m)] * ginv;
        const int idx = *G.index_of(conj);
        if (!std::binary_search(members.begin(), members.end(), idx)) {
          push_seed(conj);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (!grew) break;
    members = subgroup_closure(G, seeds);
  }
  return members;
}

struct Quotient {
  std::vector<int> coset_of;   // element index -> coset id
  std::vector<int> rep_of;     // coset id -> element index of a representative
  int size = 0;

  int multiply(const PermSubgroup& G, int q1, int q2) const {
    const auto& a = G.elements()[static_cast<std::size_t>(rep_of[static_cast<std::size_t>(q1)])];
    const auto& b = G.elements()[static_cast<std::size_t>(rep_of[static_cast<std::size_t>(q2)])];
    return coset_of[static_cast<std::size_t>(*G.index_of(a * b))];
  }
};

Quotient quotient_by(const PermSubgroup& G, const std::vector<int>& normal_subgroup) {
  Quotient q;
  q.coset_of.assign(G.order(), -1);
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (q.coset_of[i] != -1) continue;
    const int id = q.size++;
    q.rep_of.push_back(static_cast<int>(i));
    const auto& rep = G.elements()[i];
    for (int d : normal_subgroup) {
      const auto& h = G.elements()[static_cast<std::size_t>(d)];
      q.coset_of[static_cast<std::size_t>(*G.index_of(rep * h))] = id;
    }
  }
  return q;
}

int quotient_order_of(const PermSubgroup& G, const Quotient& q, int coset) {
  int ord = 1;
  int cur = coset;
  while (cur != 0) {
    cur = q.multiply(G, cur, coset);
    ++ord;
  }
  return ord;
}

// All value maps Q -> U(1) of the abelian quotient, found by assigning roots
// of unity to a greedy generating set and keeping the consistent extensions.
std::vector<std::vector<PhaseFraction>> quotient_characters(const PermSubgroup& G, const Quotient& q) {
  // Greedy generating set of the quotient.
  std::vector<int> gens;
  std::vector<bool> generated(static_cast<std::size_t>(q.size), false);
  generated[0] = true;
  int covered = 1;
  auto regenerate = [&]() {
    std::fill(generated.begin(), generated.end(), false);
    generated[0] = true;
    covered = 1;
    std::deque<int> todo{0};
    while (!todo.empty()) {
      const int x = todo.front();
      todo.pop_front();
      for (int g : gens) {
        const int y = q.multiply(G, g, x);
        if (!generated[static_cast<std::size_t>(y)]) {
          generated[static_cast<std::size_t>(y)] = true;
          ++covered;
          todo.push_back(y);
        }
      }
    }
  };
  for (int c = 1; c < q.size; ++c) {
    if (!generated[static_cast<std::size_t>(c)]) {
      gens.push_back(c);
      regenerate();
      if (covered == q.size) break;
    }
  }

  std::vector<int> gen_orders;
  gen_orders.reserve(gens.size());
  for (int g : gens) gen_orders.push_back(quotient_order_of(G, q, g));

  std::vector<std::vector<PhaseFraction>> found;
  std::vector<std::int64_t> choice(gens.size(), 0);
  for (;;) {
    // Try the current assignment gens[i] -> choice[i]/gen_orders[i].
    std::vector<PhaseFraction> values(static_cast<std::size_t>(q.size));
    std::vector<bool> assigned(static_cast<std::size_t>(q.size), false);
    assigned[0] = true;
    bool ok = true;
    std::deque<int> todo{0};
    while (ok && !todo.empty()) {
      const int x = todo.front();
      todo.pop_front();
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const int y = q.multiply(G, gens[gi], x);
        const PhaseFraction v =
            PhaseFraction(choice[gi], gen_orders[gi]) * values[static_cast<std::size_t>(x)];
        if (!assigned[static_cast<std::size_t>(y)]) {
          assigned[static_cast<std::size_t>(y)] = true;
          values[static_cast<std::size_t>(y)] = v;
          todo.push_back(y);
        } else if (values[static_cast<std::size_t>(y)] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      // Full homomorphism check over the quotient multiplication table.
      for (int a = 0; ok && a < q.size; ++a)
        for (int b = 0; b < q.size; ++b)
          if (values[static_cast<std::size_t>(q.multiply(G, a, b))] !=
              values[static_cast<std::size_t>(a)] * values[static_cast<std::size_t>(b)]) {
            ok = false;
            break;
          }
    }
    if (ok) found.push_back(std::move(values));

    // Next assignment (odometer).
    std::size_t pos = 0;
    for (; pos < gens.size(); ++pos) {
      if (++choice[pos] < gen_orders[pos]) break;
      choice[pos] = 0;
    }
    if (pos == gens.size()) break;
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (static_cast<int>(found.size()) != q.size)
    throw std::logic_error("abelian quotient character count mismatch");
  return found;
}

}  // namespace

std::vector<PhaseHom> dual_group(const SubgroupPtr& G) {
  if (!G) throw InvalidInputError("null group");
  const auto derived = derived_subgroup(*G);
  const auto quot = quotient_by(*G, derived);
  const auto qchars = quotient_characters(*G, quot);

  std::vector<std::vector<PhaseFraction>> lifted;
  lifted.reserve(qchars.size());
  for (const auto& qc : qchars) {
    std::vector<PhaseFraction> values(G->order());
    for (std::size_t i = 0; i < G->order(); ++i)
      values[i] = qc[static_cast<std::size_t>(quot.coset_of[i])];
    lifted.push_back(std::move(values));
  }
  std::sort(lifted.begin(), lifted.end());

  std::vector<PhaseHom> out;
  out.reserve(lifted.size());
  for (auto& values : lifted) out.emplace_back(G, std::move(values));
  return out;
}

std::optional<PhaseHom> phase_hom_from_generator_values(const SubgroupPtr& G,
                                                        const std::vector<PhaseFraction>& gen_values) {
  if (!G) throw InvalidInputError("null group");
  if (gen_values.size() != G->generators().size())
    throw InvalidInputError("one value per generator required");

  const std::size_t order = G->order();
  std::vector<PhaseFraction> values(order);
  std::vector<bool> assigned(order, false);
  const int id = *G->index_of(G->identity());
  assigned[static_cast<std::size_t>(id)] = true;
  std::deque<int> todo{id};
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop_front();
    for (std::size_t gi = 0; gi < gen_values.size(); ++gi) {
      const int y = *G->index_of(G->generators()[gi] * G->elements()[static_cast<std::size_t>(x)]);
      const PhaseFraction v = gen_values[gi] * values[static_cast<std::size_t>(x)];
      if (!assigned[static_cast<std::size_t>(y)]) {
        assigned[static_cast<std::size_t>(y)] = true;
        values[static_cast<std::size_t>(y)] = v;
        todo.push_back(y);
      } else if (values[static_cast<std::size_t>(y)] != v) {
        return std::nullopt;
      }
    }
  }
  if (!std::all_of(assigned.begin(), assigned.end(), [](bool b) { return b; }))
    return std::nullopt;  // generators do not generate the group

  // Every element-times-generator edge must be consistent, not just the BFS
  // tree edges; this certifies the extension is a homomorphism.
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t gi = 0; gi < gen_values.size(); ++gi) {
      const int y = *G->index_of(G->generators()[gi] * G->elements()[i]);
      if (values[static_cast<std::size_t>(y)] != gen_values[gi] * values[i]) return std::nullopt;
    }
  return PhaseHom(G, std::move(values));
}

bool compatible_with_orbit(const PhaseHom& t, const OrbitRecord& orb) {
  const auto& G = *t.group();
  if (orb.group->kind() != G.kind() || orb.group->n() != G.n())
    throw InvalidInputError("character and orbit belong to different groups");
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (act_on_bits(G.elements()[i], orb.representative) == orb.representative &&
        !t.value_at(static_cast<int>(i)).is_one())
      return false;
  }
  return true;
}

nlohmann::json phase_hom_to_json(const PhaseHom& t) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : t.group()->generators()) {
    const PhaseFraction v = t.evaluate(g);
    gens.push_back({{"sigma", to_cycle_string(g)}, {"angle", {v.num(), v.den()}}});
  }
  return {{"kind", std::string(1, to_char(t.group()->kind()))},
          {"n", t.group()->n()},
          {"generators", gens}};
}

PhaseHom phase_hom_from_json(const nlohmann::json& j, const SubgroupCaps& caps) {
  const auto kind = kind_from_char(j.at("kind").get<std::string>().at(0));
  const int n = j.at("n").get<int>();
  const SubgroupPtr G = make_subgroup(kind, n, caps);
  const auto& gens = j.at("generators");
  if (gens.size() != G->generators().size())
    throw InvalidInputError("serialized character has the wrong generator count");
  std::vector<PhaseFraction> gen_values;
  gen_values.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& entry = gens[i];
    if (parse_cycles(entry.at("sigma").get<std::string>(), n) != G->generators()[i])
      throw InvalidInputError("serialized character generators do not match the canonical ones");
    gen_values.emplace_back(entry.at("angle").at(0).get<std::int64_t>(),
                            entry.at("angle").at(1).get<std::int64_t>());
  }
  auto t = phase_hom_from_generator_values(G, gen_values);
  if (!t) throw InvalidInputError("serialized character values are not a homomorphism");
  return *t;
}

}  // namespace permsym
