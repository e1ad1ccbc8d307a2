#pragma once

// Combinatorial model of a multibased link: components are cyclic sequences
// of basepoints alternating z, w, z, w, ... along the orientation, plus
// colorings sigma: basepoints -> palette and arcs between w-basepoints.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "floer/poly.hpp"

namespace floer {

struct Basepoint {
    std::string id;
    char kind{'w'};  // 'w' or 'z'
    friend auto operator<=>(const Basepoint&, const Basepoint&) = default;
};

// An arc on a component between two w-basepoints, oriented from `from` to
// `to` along the component. A whole component (no endpoints) is modeled with
// from == to == nullopt.
struct Arc {
    std::string component;
    std::optional<std::string> from_w;
    std::optional<std::string> to_w;

    static Arc whole(std::string comp) { return {std::move(comp), {}, {}}; }
    static Arc between(std::string comp, std::string a, std::string b) {
        return {std::move(comp), std::move(a), std::move(b)};
    }
    bool is_whole() const { return !from_w.has_value(); }
};

struct Coloring {
    std::map<std::string, std::string> sigma;  // basepoint id -> color id
    std::set<std::string> palette;

    const std::string& color_of(const std::string& bp) const {
        auto it = sigma.find(bp);
        if (it == sigma.end()) fail("UnknownBasepoint", "no color for basepoint " + bp);
        return it->second;
    }
};

class LinkConfig {
  public:
    LinkConfig() = default;

    // Components are given as cyclic lists of basepoints in orientation
    // order; each list must alternate z and w and contain at least one pair.
    static LinkConfig from_components(
        std::vector<std::pair<std::string, std::vector<Basepoint>>> comps) {
        LinkConfig cfg;
        std::set<std::string> seen;
        for (auto& [cid, bps] : comps) {
            if (bps.empty() || bps.size() % 2 != 0)
                fail("AlternationViolation", "component " + cid + " needs ≥1 alternating pair");
            for (size_t i = 0; i < bps.size(); ++i) {
                if (bps[i].kind != (i % 2 == 0 ? bps[0].kind : (bps[0].kind == 'z' ? 'w' : 'z')))
                    fail("AlternationViolation", "component " + cid + " does not alternate");
                if (!seen.insert(bps[i].id).second)
                    fail("DuplicateBasepoint", "basepoint id " + bps[i].id + " reused");
            }
            cfg.order_.push_back(cid);
            cfg.comps_[cid] = std::move(bps);
        }
        return cfg;
    }

    const std::vector<std::string>& component_ids() const { return order_; }

    const std::vector<Basepoint>& component(const std::string& cid) const {
        auto it = comps_.find(cid);
        if (it == comps_.end()) fail("NotFound", "no component " + cid);
        return it->second;
    }

    bool has_basepoint(const std::string& id) const { return locate(id).has_value(); }

    const Basepoint& basepoint(const std::string& id) const {
        auto loc = locate(id);
        if (!loc) fail("NotFound", "no basepoint " + id);
        return comps_.at(loc->first)[loc->second];
    }

    const std::string& component_of(const std::string& bp) const {
        auto loc = locate(bp);
        if (!loc) fail("NotFound", "no basepoint " + bp);
        return comps_.find(loc->first)->first;
    }

    int pair_count(const std::string& cid) const {
        return static_cast<int>(component(cid).size() / 2);
    }

    std::vector<std::string> basepoints_of_kind(const std::string& cid, char kind) const {
        std::vector<std::string> out;
        for (const Basepoint& b : component(cid))
            if (b.kind == kind) out.push_back(b.id);
        return out;
    }

    std::vector<std::string> all_of_kind(char kind) const {
        std::vector<std::string> out;
        for (const std::string& cid : order_)
            for (const Basepoint& b : comps_.at(cid))
                if (b.kind == kind) out.push_back(b.id);
        return out;
    }

    const Basepoint& next(const std::string& bp) const { return step(bp, +1); }
    const Basepoint& prev(const std::string& bp) const { return step(bp, -1); }

    // The w-basepoints immediately before and after z in cyclic order; they
    // coincide on a one-pair component.
    std::pair<std::string, std::string> adjacent_w_of_z(const std::string& z) const {
        const Basepoint& b = basepoint(z);
        if (b.kind != 'z') fail("NotFound", z + " is not a z-basepoint");
        return {prev(z).id, next(z).id};
    }

    // The z-basepoints immediately before and after w in cyclic order.
    std::pair<std::string, std::string> adjacent_z_of_w(const std::string& w) const {
        const Basepoint& b = basepoint(w);
        if (b.kind != 'w') fail("NotFound", w + " is not a w-basepoint");
        return {prev(w).id, next(w).id};
    }

    bool adjacent(const std::string& a, const std::string& b) const {
        return next(a).id == b || prev(a).id == b;
    }

    // z-basepoints strictly inside the oriented arc; for a whole component,
    // every z on it.
    std::vector<std::string> arc_z_basepoints(const Arc& a) const {
        const auto& bps = component(a.component);
        if (a.is_whole()) {
            std::vector<std::string> out;
            for (const Basepoint& b : bps)
                if (b.kind == 'z') out.push_back(b.id);
            return out;
        }
        int from = index_on(a.component, *a.from_w);
        int to = index_on(a.component, *a.to_w);
        if (bps[from].kind != 'w' || bps[to].kind != 'w')
            fail("InvalidArc", "arc endpoints must be w-basepoints");
        if (from == to) fail("InvalidArc", "empty arc on " + a.component);
        std::vector<std::string> out;
        int n = static_cast<int>(bps.size());
        for (int i = (from + 1) % n; i != to; i = (i + 1) % n)
            if (bps[i].kind == 'z') out.push_back(bps[i].id);
        return out;
    }

    Arc complement(const Arc& a) const {
        if (a.is_whole()) fail("InvalidArc", "whole component has no complement arc");
        return Arc::between(a.component, *a.to_w, *a.from_w);
    }

    // True when w is an endpoint of the arc (never for a whole component).
    bool is_endpoint(const Arc& a, const std::string& w) const {
        if (a.is_whole()) return false;
        return *a.from_w == w || *a.to_w == w;
    }

    // Insert a new z,w pair immediately after the given w-basepoint, so the
    // cyclic order becomes ..., after, z_new, w_new, ... .
    LinkConfig insert_pair(const std::string& cid, const std::string& after,
                           const std::string& z_id, const std::string& w_id) const {
        const auto& bps = component(cid);
        if (basepoint(after).kind != 'w')
            fail("AlternationViolation", "insertion after " + after + " breaks alternation");
        if (has_basepoint(z_id) || has_basepoint(w_id))
            fail("DuplicateBasepoint", "inserted basepoint id already in use");
        LinkConfig out = *this;
        auto& nbps = out.comps_[cid];
        int at = index_on(cid, after);
        nbps.insert(nbps.begin() + at + 1, {Basepoint{z_id, 'z'}, Basepoint{w_id, 'w'}});
        return out;
    }

    LinkConfig remove_pair(const std::string& z_id, const std::string& w_id) const {
        auto zl = locate(z_id), wl = locate(w_id);
        if (!zl || !wl || zl->first != wl->first)
            fail("NotFound", "pair " + z_id + "," + w_id + " not on one component");
        LinkConfig out = *this;
        auto& bps = out.comps_[zl->first];
        if (bps.size() <= 2) fail("AlternationViolation", "cannot remove the last pair");
        if ((zl->second + 1) % bps.size() != static_cast<size_t>(wl->second))
            fail("NotFound", w_id + " does not immediately follow " + z_id);
        std::vector<Basepoint> kept;
        for (const Basepoint& b : bps)
            if (b.id != z_id && b.id != w_id) kept.push_back(b);
        bps = std::move(kept);
        return out;
    }

    // Trivial coloring: each w-basepoint is its own color, all z's of a
    // component share the component's color.
    Coloring trivial_coloring() const {
        Coloring c;
        for (const std::string& cid : order_) {
            for (const Basepoint& b : comps_.at(cid)) {
                std::string col = b.kind == 'w' ? b.id : cid;
                c.sigma[b.id] = col;
                c.palette.insert(col);
            }
        }
        return c;
    }

    // Like the trivial coloring but all w-basepoints on `merged` share one
    // color (the hypothesis of the partial-twist formula).
    Coloring merged_w_coloring(const std::string& merged) const {
        Coloring c = trivial_coloring();
        std::string col = "w(" + merged + ")";
        for (const Basepoint& b : component(merged))
            if (b.kind == 'w') {
                c.palette.erase(c.sigma[b.id]);
                c.sigma[b.id] = col;
            }
        c.palette.insert(col);
        return c;
    }

    // All z's of one component must share a color.
    void validate_coloring(const Coloring& c) const {
        for (const std::string& cid : order_) {
            std::string zc;
            for (const Basepoint& b : comps_.at(cid)) {
                auto it = c.sigma.find(b.id);
                if (it == c.sigma.end()) fail("UnknownBasepoint", "no color for " + b.id);
                if (b.kind == 'z') {
                    if (zc.empty())
                        zc = it->second;
                    else if (zc != it->second)
                        fail("ColoringViolation",
                             "z-basepoints of " + cid + " carry distinct colors");
                }
            }
        }
    }

    VarId var_of(const std::string& bp) const {
        const Basepoint& b = basepoint(bp);
        return b.kind == 'w' ? VarId::u(b.id) : VarId::v(b.id);
    }

    friend bool operator==(const LinkConfig&, const LinkConfig&) = default;

  private:
    std::vector<std::string> order_;
    std::map<std::string, std::vector<Basepoint>> comps_;

    std::optional<std::pair<std::string, int>> locate(const std::string& id) const {
        for (const auto& [cid, bps] : comps_)
            for (size_t i = 0; i < bps.size(); ++i)
                if (bps[i].id == id) return {{cid, static_cast<int>(i)}};
        return std::nullopt;
    }

    int index_on(const std::string& cid, const std::string& id) const {
        const auto& bps = component(cid);
        for (size_t i = 0; i < bps.size(); ++i)
            if (bps[i].id == id) return static_cast<int>(i);
        fail("NotFound", id + " not on component " + cid);
    }

    const Basepoint& step(const std::string& bp, int dir) const {
        auto loc = locate(bp);
        if (!loc) fail("NotFound", "no basepoint " + bp);
        const auto& bps = comps_.at(loc->first);
        int n = static_cast<int>(bps.size());
        return bps[(loc->second + dir + n) % n];
    }
};

}  // namespace floer
