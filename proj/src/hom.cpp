#include "projpair/hom.hpp"

#include <algorithm>
#include <map>

namespace projpair {

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<Elem> map) {
    if (int(map.size()) != source->order) throw InvalidInput("hom map has wrong length");
    for (Elem v : map)
        if (v < 0 || v >= target->order) throw InvalidInput("hom image out of range");
    if (map[0] != 0) throw InvalidInput("hom does not preserve the identity");
    for (Elem a = 0; a < source->order; ++a)
        for (Elem b = 0; b < source->order; ++b)
            if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
                throw InvalidInput("map is not a homomorphism");

    GroupHom h;
    h.source = source;
    h.target = target;
    h.map = std::move(map);
    std::vector<Elem> ker, img;
    std::vector<char> seen(target->order, 0);
    for (Elem a = 0; a < source->order; ++a) {
        if (h.map[a] == 0) ker.push_back(a);
        if (!seen[h.map[a]]) {
            seen[h.map[a]] = 1;
            img.push_back(h.map[a]);
        }
    }
    h.kernel = make_subgroup(source, std::move(ker));
    h.image = make_subgroup(target, std::move(img));
    return h;
}

GroupHom identity_hom(GroupPtr group) {
    std::vector<Elem> m(group->order);
    for (Elem a = 0; a < group->order; ++a) m[a] = a;
    return make_hom(group, group, std::move(m));
}

GroupHom trivial_hom(GroupPtr source, GroupPtr target) {
    return make_hom(source, target, std::vector<Elem>(source->order, 0));
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
    if (outer.source != inner.target) throw InvalidInput("hom composition mismatch");
    std::vector<Elem> m(inner.source->order);
    for (Elem a = 0; a < inner.source->order; ++a) m[a] = outer.map[inner.map[a]];
    return make_hom(inner.source, outer.target, std::move(m));
}

GroupHom hom_from_generator_images(GroupPtr source, GroupPtr target,
                                   const std::vector<Elem>& images) {
    if (images.size() != source->generators.size())
        throw InvalidInput("generator image count mismatch");
    std::vector<Elem> m(source->order, -1);
    m[0] = 0;
    // Extend along the BFS tree: elem = parent * gen.
    for (Elem a = 1; a < source->order; ++a) {
        Elem p = source->tree_parent[a];
        int gi = source->tree_gen[a];
        if (m[p] < 0) throw std::logic_error("BFS tree out of order");
        m[a] = target->mul(m[p], images[gi]);
    }
    return make_hom(source, target, std::move(m));
}

SubHom make_subhom(Subgroup domain, GroupPtr target, std::vector<Elem> map) {
    if (int(map.size()) != domain.parent->order) throw InvalidInput("subhom map has wrong length");
    for (Elem x = 0; x < domain.parent->order; ++x) {
        if (domain.contains(x)) {
            if (map[x] < 0 || map[x] >= target->order)
                throw InvalidInput("subhom image out of range");
        } else if (map[x] != -1) {
            throw InvalidInput("subhom defined outside its domain");
        }
    }
    if (map[0] != 0) throw InvalidInput("subhom does not preserve the identity");
    for (Elem a : domain.members)
        for (Elem b : domain.members)
            if (map[domain.parent->mul(a, b)] != target->mul(map[a], map[b]))
                throw InvalidInput("subhom map is not multiplicative");
    SubHom h;
    h.domain = std::move(domain);
    h.target = target;
    h.map = std::move(map);
    return h;
}

SubHom restrict_hom(const GroupHom& hom, const Subgroup& domain) {
    if (domain.parent != hom.source) throw InvalidInput("restriction domain mismatch");
    std::vector<Elem> m(hom.source->order, -1);
    for (Elem x : domain.members) m[x] = hom.map[x];
    return make_subhom(domain, hom.target, std::move(m));
}

SubHom compose(const GroupHom& outer, const SubHom& inner) {
    if (outer.source != inner.target) throw InvalidInput("hom composition mismatch");
    std::vector<Elem> m(inner.map.size(), -1);
    for (Elem x : inner.domain.members) m[x] = outer.map[inner.map[x]];
    return make_subhom(inner.domain, outer.target, std::move(m));
}

Subgroup image_of(const GroupHom& hom, const Subgroup& sub) {
    if (sub.parent != hom.source) throw InvalidInput("image_of domain mismatch");
    std::vector<Elem> out;
    for (Elem x : sub.members) out.push_back(hom.map[x]);
    return make_subgroup(hom.target, std::move(out));
}

Subgroup preimage_of(const GroupHom& hom, const Subgroup& sub) {
    if (sub.parent != hom.target) throw InvalidInput("preimage_of target mismatch");
    std::vector<Elem> out;
    for (Elem x = 0; x < hom.source->order; ++x)
        if (sub.contains(hom.map[x])) out.push_back(x);
    return make_subgroup(hom.source, std::move(out));
}

Subgroup image_of(const SubHom& hom) {
    std::vector<Elem> out;
    for (Elem x : hom.domain.members) out.push_back(hom.map[x]);
    return make_subgroup(hom.target, std::move(out));
}

namespace {

// Backtracking search state: a partial homomorphism on the subgroup
// generated by the assigned generators, grown by closure and checked
// against the constraints as each element's image becomes known.
class HomSearcher {
public:
    HomSearcher(GroupPtr source, GroupPtr target, const HomConstraints& c,
                bool surjective_only, const HomVisitor& visit)
        : src_(source), tgt_(target), c_(c), surjective_only_(surjective_only),
          visit_(visit) {
        validate_constraints();
        img_.assign(src_->order, -1);
        pin_of_.assign(src_->order, -1);
        for (auto [x, t] : c_.pin) {
            if (x < 0 || x >= src_->order || t < 0 || t >= tgt_->order)
                throw InvalidInput("pin out of range");
            if (pin_of_[x] >= 0 && pin_of_[x] != t) conflicting_pins_ = true;
            pin_of_[x] = t;
        }
    }

    long long run() {
        if (conflicting_pins_) return 0;
        std::vector<Elem> trail;
        if (!extend(0, 0, trail)) return 0;  // identity must map to identity
        recurse(0);
        return count_;
    }

private:
    void validate_constraints() {
        if (c_.commuting) {
            if (c_.commuting->after.source != tgt_ || c_.commuting->equals.source != src_ ||
                c_.commuting->after.target != c_.commuting->equals.target)
                throw InvalidInput("commuting constraint groups inconsistent");
        }
        if (c_.image_in) {
            if (c_.image_in->of_source.parent != src_ || c_.image_in->into.parent != tgt_)
                throw InvalidInput("image_in constraint groups inconsistent");
        }
        if (c_.restriction) {
            if (c_.restriction->domain.parent != src_ || c_.restriction->target != tgt_)
                throw InvalidInput("restriction constraint groups inconsistent");
        }
    }

    bool check_element(Elem x, Elem ix) {
        if (c_.commuting &&
            c_.commuting->after.map[ix] != c_.commuting->equals.map[x])
            return false;
        if (c_.image_in && c_.image_in->of_source.contains(x) &&
            !c_.image_in->into.contains(ix))
            return false;
        if (c_.restriction && c_.restriction->defined(x) &&
            c_.restriction->map[x] != ix)
            return false;
        if (pin_of_[x] >= 0 && pin_of_[x] != ix) return false;
        return true;
    }

    // Set img_[a] = ia and propagate products with everything already known.
    // Newly assigned elements are recorded on the trail for rollback.
    bool extend(Elem a, Elem ia, std::vector<Elem>& trail) {
        std::vector<Elem> pending;
        auto assign = [&](Elem x, Elem ix) -> bool {
            if (img_[x] >= 0) return img_[x] == ix;
            if (!check_element(x, ix)) return false;
            img_[x] = ix;
            trail.push_back(x);
            pending.push_back(x);
            return true;
        };
        if (!assign(a, ia)) return false;
        for (std::size_t pi = 0; pi < pending.size(); ++pi) {
            Elem x = pending[pi];
            for (std::size_t ki = 0; ki < known_.size(); ++ki) {
                Elem y = known_[ki];
                if (!assign(src_->mul(x, y), tgt_->mul(img_[x], img_[y]))) return false;
                if (!assign(src_->mul(y, x), tgt_->mul(img_[y], img_[x]))) return false;
            }
            if (!assign(src_->mul(x, x), tgt_->mul(img_[x], img_[x]))) return false;
            known_.push_back(x);
        }
        return true;
    }

    void rollback(std::size_t trail_mark, std::size_t known_mark,
                  const std::vector<Elem>& trail) {
        for (std::size_t i = trail_mark; i < trail.size(); ++i) img_[trail[i]] = -1;
        known_.resize(known_mark);
    }

    void recurse(std::size_t gen_idx) {
        if (stopped_) return;
        if (gen_idx == src_->generators.size()) {
            emit();
            return;
        }
        Elem g = src_->generators[gen_idx];
        if (img_[g] >= 0) {  // already forced by closure
            recurse(gen_idx + 1);
            return;
        }
        int g_order = src_->element_order[g];
        for (Elem t = 0; t < tgt_->order && !stopped_; ++t) {
            if (g_order % tgt_->element_order[t] != 0) continue;
            std::vector<Elem> trail;
            std::size_t known_mark = known_.size();
            if (extend(g, t, trail)) recurse(gen_idx + 1);
            rollback(0, known_mark, trail);
        }
    }

    void emit() {
        // All generators assigned; closure has determined every element.
        std::vector<Elem> full = img_;
        for (Elem v : full)
            if (v < 0) throw std::logic_error("incomplete closure at emit");
        if (surjective_only_) {
            std::vector<char> hit(tgt_->order, 0);
            int distinct = 0;
            for (Elem v : full)
                if (!hit[v]) {
                    hit[v] = 1;
                    ++distinct;
                }
            if (distinct != tgt_->order) return;
        }
        GroupHom h = make_hom(src_, tgt_, std::move(full));
        ++count_;
        if (!visit_(h)) stopped_ = true;
    }

    GroupPtr src_, tgt_;
    const HomConstraints& c_;
    bool surjective_only_;
    const HomVisitor& visit_;
    std::vector<Elem> img_;
    std::vector<Elem> known_;
    std::vector<Elem> pin_of_;
    bool conflicting_pins_ = false;
    bool stopped_ = false;
    long long count_ = 0;
};

}  // namespace

long long enumerate_homs(GroupPtr source, GroupPtr target,
                         const HomConstraints& constraints,
                         bool surjective_only, const HomVisitor& visit) {
    HomSearcher searcher(source, target, constraints, surjective_only, visit);
    return searcher.run();
}

std::vector<GroupHom> all_homs(GroupPtr source, GroupPtr target,
                               const HomConstraints& constraints,
                               bool surjective_only) {
    std::vector<GroupHom> out;
    enumerate_homs(source, target, constraints, surjective_only,
                   [&](const GroupHom& h) {
                       out.push_back(h);
                       return true;
                   });
    return out;
}

std::optional<GroupHom> first_hom(GroupPtr source, GroupPtr target,
                                  const HomConstraints& constraints,
                                  bool surjective_only) {
    std::optional<GroupHom> out;
    enumerate_homs(source, target, constraints, surjective_only,
                   [&](const GroupHom& h) {
                       out = h;
                       return false;
                   });
    return out;
}

namespace {

HomConstraints section_constraints(const GroupHom& epi) {
    if (!epi.is_surjective()) throw InvalidInput("sections_of requires a surjective hom");
    HomConstraints c;
    c.commuting = HomConstraints::Commuting{epi, identity_hom(epi.target)};
    return c;
}

}  // namespace

std::vector<GroupHom> sections_of(const GroupHom& epi) {
    return all_homs(epi.target, epi.source, section_constraints(epi), false);
}

std::optional<GroupHom> first_section_of(const GroupHom& epi) {
    return first_hom(epi.target, epi.source, section_constraints(epi), false);
}

EmbeddedGroup subgroup_as_group(const Subgroup& sub) {
    const auto& parent = *sub.parent;
    int n = sub.size();
    std::vector<int> to_local(parent.order, -1);
    for (int i = 0; i < n; ++i) to_local[sub.members[i]] = i;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[i][j] = to_local[parent.mul(sub.members[i], sub.members[j])];
    std::vector<Elem> gens;
    for (Elem g : greedy_generators(sub)) gens.push_back(to_local[g]);
    std::string name = parent.name.empty() ? "" : parent.name + "_sub" + std::to_string(n);
    GroupPtr g = build_group_from_table(table, gens, name, parent.order);
    std::vector<Elem> incl(n);
    for (int i = 0; i < n; ++i) incl[i] = sub.members[i];
    EmbeddedGroup out;
    out.group = g;
    out.inclusion = make_hom(g, sub.parent, std::move(incl));
    return out;
}

QuotientGroup quotient_group(GroupPtr group, const Subgroup& normal_sub) {
    if (normal_sub.parent != group) throw InvalidInput("quotient subgroup mismatch");
    if (!is_normal(normal_sub)) throw InvalidInput("quotient by a non-normal subgroup");
    int n = group->order;
    // Cosets labeled in order of least representative; the identity coset
    // contains 0 and therefore comes first.
    std::vector<int> coset_of(n, -1);
    std::vector<Elem> rep;
    for (Elem x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        int id = int(rep.size());
        rep.push_back(x);
        for (Elem k : normal_sub.members) coset_of[group->mul(x, k)] = id;
    }
    int q = int(rep.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[i][j] = coset_of[group->mul(rep[i], rep[j])];
    std::vector<Elem> gens;
    {
        std::vector<char> seen(q, 0);
        seen[0] = 1;
        for (Elem g : group->generators) {
            int c = coset_of[g];
            if (!seen[c]) {
                seen[c] = 1;
                gens.push_back(c);
            }
        }
    }
    std::string name = group->name.empty() ? "" : group->name + "_mod" + std::to_string(normal_sub.size());
    GroupPtr qg = build_group_from_table(table, gens, name, group->order);
    std::vector<Elem> proj(n);
    for (Elem x = 0; x < n; ++x) proj[x] = coset_of[x];
    QuotientGroup out;
    out.group = qg;
    out.projection = make_hom(group, qg, std::move(proj));
    return out;
}

}  // namespace projpair
