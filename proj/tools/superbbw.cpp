#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "superbbw/bbw.hpp"
#include "superbbw/blocks.hpp"
#include "superbbw/borel_moves.hpp"
#include "superbbw/characters.hpp"
#include "superbbw/genericity.hpp"
#include "superbbw/json_io.hpp"
#include "superbbw/parse.hpp"
#include "superbbw/reciprocity.hpp"
#include "superbbw/util.hpp"
#include "superbbw/weyl.hpp"

using namespace superbbw;
using nlohmann::json;

namespace {

// Column-aligned text block: cells are padded to the widest entry of their
// column, two spaces between columns, no trailing padding.
struct Table {
    std::vector<std::vector<std::string>> rows;

    void row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }

    void print(std::ostream& out) const {
        std::vector<std::size_t> width;
        for (const auto& r : rows)
            for (std::size_t i = 0; i + 1 < r.size(); ++i) {
                if (width.size() <= i) width.resize(i + 1, 0);
                width[i] = std::max(width[i], r[i].size());
            }
        for (const auto& r : rows) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) line += "  ";
                line += r[i];
                if (i + 1 < r.size() && i < width.size())
                    line.append(width[i] - r[i].size(), ' ');
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out << line << "\n";
        }
    }
};

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string word_str(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += " ";
        out += "s" + std::to_string(word[i] + 1);
    }
    return out;
}

std::string weights_str(const std::vector<Weight>& ws) {
    if (ws.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ", ";
        out += ws[i].str();
    }
    return out;
}

json weight_list_json(const std::vector<Weight>& ws) {
    json a = json::array();
    for (const Weight& w : ws) a.push_back(weight_json(w));
    return a;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json envelope(const std::string& command, const AlgebraSpec& spec) {
    return json{{"schema", kJsonSchema}, {"command", command}, {"algebra", spec.str()}};
}

void print_character_rows(Table& t, const FormalCharacter& ch) {
    t.row({"mult", "weight"});
    for (const auto& entry : ch.sorted())
        t.row({std::to_string(entry.second), entry.first.str()});
}

void print_g0_rows(Table& t, const VirtualG0Sum& v) {
    t.row({"coeff", "hw"});
    for (const auto& entry : v.c) t.row({std::to_string(entry.second), entry.first.str()});
}

// Shared per-command arguments.
struct CommonOpts {
    std::string algebra;
    std::string borel = "distinguished";
    std::string weight;
    bool json_mode = false;
    long long limit = 0;
    unsigned jobs = 1;

    void apply_limit() const {
        if (limit > 0) setenv("SUPERBBW_LIMIT", std::to_string(limit).c_str(), 1);
    }
};

int run_roots(const CommonOpts& o) {
    o.apply_limit();
    Algebra D = make_algebra(parse_algebra(o.algebra));
    BorelData b = parse_borel(o.borel, *D);
    auto mark = [](const SimpleRootInfo& s) {
        if (!s.odd) return std::string("even");
        return s.isotropic ? std::string("odd isotropic") : std::string("odd");
    };
    if (o.json_mode) {
        json j = envelope("roots", D->spec);
        j["borel"] = b.label;
        j["rank"] = json{{"delta", D->nd}, {"epsilon", D->ne}};
        j["type_I"] = D->type_I;
        j["even_positive"] = weight_list_json(D->even_positive);
        j["odd_positive"] = weight_list_json(b.odd_positive);
        json simples = json::array();
        for (const auto& s : b.simples)
            simples.push_back(json{{"root", weight_json(s.root)},
                                   {"odd", s.odd},
                                   {"isotropic", s.isotropic}});
        j["simples"] = simples;
        j["rho0"] = weight_json(D->rho0);
        j["rho1"] = weight_json(b.rho1);
        j["rho"] = weight_json(b.rho);
        emit(j);
        return 0;
    }
    Table head;
    head.row({"algebra", D->spec.str()});
    head.row({"borel", b.label});
    head.row({"delta", std::to_string(D->nd)});
    head.row({"epsilon", std::to_string(D->ne)});
    head.row({"type I", yn(D->type_I)});
    head.print(std::cout);
    std::cout << "even positive roots (" << D->even_positive.size() << ")\n";
    for (const Weight& a : D->even_positive) std::cout << "  " << a.str() << "\n";
    std::cout << "odd positive roots (" << b.odd_positive.size() << ")\n";
    for (const Weight& g : b.odd_positive) std::cout << "  " << g.str() << "\n";
    std::cout << "simple roots\n";
    Table simple;
    for (const auto& s : b.simples) simple.row({"  " + s.root.str(), mark(s)});
    simple.print(std::cout);
    Table tail;
    tail.row({"rho0", D->rho0.str()});
    tail.row({"rho1", b.rho1.str()});
    tail.row({"rho", b.rho.str()});
    tail.print(std::cout);
    return 0;
}

struct WeylOpts : CommonOpts {
    std::string orbit;
    std::string action = "dot";
};

int run_weyl(const WeylOpts& o) {
    o.apply_limit();
    Algebra D = make_algebra(parse_algebra(o.algebra));
    WeylGroup W(*D);
    BorelData b = parse_borel(o.borel, *D);
    if (o.action != "dot" && o.action != "circle" && o.action != "plain")
        fail_parse("unknown action '" + o.action + "', expected dot, circle or plain");

    std::vector<long long> lengths(static_cast<std::size_t>(W.max_length()) + 1, 0);
    for (int l = 0; l <= W.max_length(); ++l)
        lengths[static_cast<std::size_t>(l)] = static_cast<long long>(W.of_length(l).size());

    std::vector<std::string> images;
    std::optional<Weight> lam;
    if (!o.orbit.empty()) {
        lam = parse_weight(o.orbit, *D);
        images.resize(W.size());
        parallel_for(W.size(), o.jobs, [&](std::size_t i) {
            const WeylElement& w = W[i];
            Weight img = o.action == "dot"     ? W.dot(w, *lam, b)
                         : o.action == "circle" ? W.circ(w, *lam)
                                                : w.apply(*lam);
            images[i] = img.str();
        });
    }

    if (o.json_mode) {
        json j = envelope("weyl", D->spec);
        j["borel"] = b.label;
        j["order"] = W.size();
        j["lengths"] = lengths;
        if (lam) {
            j["action"] = o.action;
            j["weight"] = weight_json(*lam);
            json orbit = json::array();
            for (std::size_t i = 0; i < W.size(); ++i)
                orbit.push_back(json{{"word", word_str(W[i].word)},
                                     {"length", W[i].length},
                                     {"image", images[i]}});
            j["orbit"] = orbit;
        }
        emit(j);
        return 0;
    }
    Table head;
    head.row({"algebra", D->spec.str()});
    head.row({"borel", b.label});
    head.row({"order", std::to_string(W.size())});
    head.print(std::cout);
    Table dist;
    dist.row({"length", "count"});
    for (std::size_t l = 0; l < lengths.size(); ++l)
        dist.row({std::to_string(l), std::to_string(lengths[l])});
    dist.print(std::cout);
    if (lam) {
        std::cout << "orbit of " << lam->str() << " under " << o.action << "\n";
        Table orbit;
        orbit.row({"word", "length", "image"});
        for (std::size_t i = 0; i < W.size(); ++i)
            orbit.row({word_str(W[i].word), std::to_string(W[i].length), images[i]});
        orbit.print(std::cout);
    }
    return 0;
}

struct EulerOpts : CommonOpts {
    bool expand = false;
    long long window = -1;
};

int run_euler(const EulerOpts& o) {
    o.apply_limit();
    Algebra D = make_algebra(parse_algebra(o.algebra));
    WeylGroup W(*D);
    CharRing ring(*D, W);
    BorelData b = parse_borel(o.borel, *D);
    Weight lam = parse_weight(o.weight, *D);
    VirtualG0Sum e = ring.euler_shift_sum(lam, b);

    std::optional<FormalCharacter> expanded;
    if (o.expand || o.window >= 0) {
        if (o.window >= 0) {
            Window win(b, lam, Rat(o.window));
            expanded = ring.expand_on_window(e, win);
        } else {
            expanded = ring.expand(e);
        }
    }

    if (o.json_mode) {
        json j = envelope("euler", D->spec);
        j["borel"] = b.label;
        j["weight"] = weight_json(lam);
        j["euler"] = g0_sum_json(e);
        if (o.window >= 0) j["window_depth"] = o.window;
        if (expanded) j["expanded"] = character_json(*expanded);
        emit(j);
        return 0;
    }
    Table head;
    head.row({"algebra", D->spec.str()});
    head.row({"borel", b.label});
    head.row({"weight", lam.str()});
    head.print(std::cout);
    std::cout << "euler virtual sum (" << e.c.size() << " terms)\n";
    Table sum;
    print_g0_rows(sum, e);
    sum.print(std::cout);
    if (expanded) {
        std::cout << "expanded character (" << expanded->size() << " weights";
        if (o.window >= 0) std::cout << ", window depth " << o.window;
        std::cout << ")\n";
        Table ch;
        print_character_rows(ch, *expanded);
        ch.print(std::cout);
    }
    return 0;
}

int run_generic(const CommonOpts& o) {
    o.apply_limit();
    Algebra D = make_algebra(parse_algebra(o.algebra));
    WeylGroup W(*D);
    BorelData b = parse_borel(o.borel, *D);
    Weight lam = parse_weight(o.weight, *D);

    TypicalityReport typ = typicality(lam, b);
    bool flags[4] = {false, false, false, false};
    parallel_for(4, o.jobs, [&](std::size_t i) {
        switch (i) {
            case 0: flags[0] = genericness(lam, b, W, GenericMode::GammaPlus).generic; break;
            case 1: flags[1] = genericness(lam, b, W, GenericMode::GammaTilde).generic; break;
            case 2: flags[2] = genericness(lam, b, W, GenericMode::Full).generic; break;
            default:
                flags[3] = relative_genericness(lam, b, W, gamma_tilde(b),
                                                max_typical_parabolic(b));
        }
    });

    if (o.json_mode) {
        json j = envelope("generic-check", D->spec);
        j["borel"] = b.label;
        j["weight"] = weight_json(lam);
        j["typical"] = typ.typical;
        j["atypicality_degree"] = typ.degree;
        j["gamma_plus_generic"] = flags[0];
        j["gamma_tilde_generic"] = flags[1];
        j["generic"] = flags[2];
        j["relatively_generic"] = flags[3];
        emit(j);
        return 0;
    }
    Table t;
    t.row({"algebra", D->spec.str()});
    t.row({"borel", b.label});
    t.row({"weight", lam.str()});
    t.row({"typical", yn(typ.typical)});
    t.row({"atypicality_degree", std::to_string(typ.degree)});
    t.row({"gamma_plus_generic", yn(flags[0])});
    t.row({"gamma_tilde_generic", yn(flags[1])});
    t.row({"generic", yn(flags[2])});
    t.row({"relatively_generic", yn(flags[3])});
    t.print(std::cout);
    return 0;
}

struct StarOpts : CommonOpts {
    std::string word;
};

int run_star(const StarOpts& o) {
    o.apply_limit();
    Algebra D = make_algebra(parse_algebra(o.algebra));
    WeylGroup W(*D);
    BorelData b = parse_borel(o.borel, *D);
    Weight lam = parse_weight(o.weight, *D);
    const WeylElement& w = parse_weyl_word(o.word, W);

    // The trail walks the canonical reduced word, rightmost letter first.
    struct Step {
        int simple;
        StarTrace trace;
    };
    std::vector<Step> steps;
    Weight cur = lam;
    for (std::size_t i = w.word.size(); i-- > 0;) {
        std::size_t s = static_cast<std::size_t>(w.word[i]);
        StarTrace tr = star_simple(s, cur, b, W, true);
        cur = tr.result;
        steps.push_back({w.word[i], std::move(tr)});
    }
    Weight res = star_action(w, lam, b, W, true);

    if (o.json_mode) {
        json j = envelope("star", D->spec);
        j["borel"] = b.label;
        j["weight"] = weight_json(lam);
        j["word"] = word_str(w.word);
        j["length"] = w.length;
        json st = json::array();
        for (const auto& s : steps)
            st.push_back(json{{"simple", s.simple + 1},
                              {"path_roots", weight_list_json(s.trace.path_roots)},
                              {"reflected_at_target", weight_json(s.trace.reflected_at_target)},
                              {"result", weight_json(s.trace.result)}});
        j["steps"] = st;
        j["result"] = weight_json(res);
        emit(j);
        return 0;
    }
    Table head;
    head.row({"algebra", D->spec.str()});
    head.row({"borel", b.label});
    head.row({"weight", lam.str()});
    head.row({"word", word_str(w.word)});
    head.row({"length", std::to_string(w.length)});
    head.print(std::cout);
    if (!steps.empty()) {
        Table t;
        t.row({"step", "simple", "path roots", "reflected", "result"});
        for (std::size_t i = 0; i < steps.size(); ++i)
            t.row({std::to_string(i + 1), "s" + std::to_string(steps[i].simple + 1),
                   weights_str(steps[i].trace.path_roots),
                   steps[i].trace.reflected_at_target.str(), steps[i].trace.result.str()});
        t.print(std::cout);
    }
    std::cout << "result  " << res.str() << "\n";
    return 0;
}

struct BbwOpts : CommonOpts {
    bool parabolic = false;
};

int run_bbw(const BbwOpts& o) {
    o.apply_limit();
    Algebra D = make_algebra(parse_algebra(o.algebra));
    WeylGroup W(*D);
    CharRing ring(*D, W);
    BorelData b = parse_borel(o.borel, *D);
    Weight mu = parse_weight(o.weight, *D);
    BBWTarget target{b, std::nullopt};
    if (o.parabolic) target.parabolic = max_typical_parabolic(b);
    CohomologyReport rep = solve_bbw(mu, target, W, ring);

    if (o.json_mode) {
        json j = envelope("bbw", D->spec);
        j["borel"] = b.label;
        j["weight"] = weight_json(mu);
        j["parabolic"] = o.parabolic;
        j["status"] = rep.complete ? "complete" : "partial";
        j["normalized"] = weight_json(rep.normalized);
        j["normalization_shift"] = rep.normalization_shift;
        j["degree_cap"] = rep.degree_cap;
        j["euler"] = g0_sum_json(rep.euler);
        json degrees = json::array();
        for (std::size_t i = 0; i < rep.constituents.size();) {
            int k = rep.constituents[i].degree;
            json cons = json::array();
            while (i < rep.constituents.size() && rep.constituents[i].degree == k)
                cons.push_back(constituent_json(rep.constituents[i++]));
            degrees.push_back(json{{"k", k}, {"constituents", cons}});
        }
        j["degrees"] = degrees;
        if (!rep.support.empty()) {
            json sup = json::array();
            for (const auto& row : rep.support)
                sup.push_back(json{{"degree", row.degree},
                                   {"candidates", weight_list_json(row.candidates)}});
            j["support"] = sup;
        }
        if (!rep.notes.empty()) j["notes"] = rep.notes;
        emit(j);
        return 0;
    }
    Table head;
    head.row({"algebra", D->spec.str()});
    head.row({"borel", b.label});
    head.row({"weight", mu.str()});
    head.row({"target", o.parabolic ? "parabolic radical" : "borel"});
    head.row({"status", rep.complete ? "complete" : "partial"});
    head.row({"normalized", rep.normalized.str() + " (shift " +
                                std::to_string(rep.normalization_shift) + ")"});
    head.row({"degree cap", std::to_string(rep.degree_cap)});
    head.print(std::cout);
    std::cout << "euler form\n";
    Table eul;
    print_g0_rows(eul, rep.euler);
    eul.print(std::cout);
    if (!rep.constituents.empty()) {
        std::cout << "constituents\n";
        Table t;
        t.row({"degree", "kind", "weight", "top", "character"});
        for (const auto& con : rep.constituents) {
            std::string kind = con.kind == ConstituentKind::SimpleModule ? "simple"
                               : con.kind == ConstituentKind::KacModule  ? "kac"
                               : con.kind == ConstituentKind::DualKacModule ? "dual-kac"
                                                                            : "euler-only";
            t.row({std::to_string(con.degree), kind, con.hw.str(),
                   con.top ? con.top->str() : "-",
                   con.character ? con.character->str() : "-"});
        }
        t.print(std::cout);
    }
    if (!rep.support.empty()) {
        std::cout << "support\n";
        Table t;
        t.row({"degree", "candidates"});
        for (const auto& row : rep.support)
            t.row({std::to_string(row.degree), weights_str(row.candidates)});
        t.print(std::cout);
    }
    for (const auto& note : rep.notes) std::cout << "note  " << note << "\n";
    return 0;
}

struct BlockOpts : CommonOpts {
    int radius = 8;
    long long window = -1;
};

int run_block(const BlockOpts& o) {
    o.apply_limit();
    Algebra D = make_algebra(parse_algebra(o.algebra));
    WeylGroup W(*D);
    CharRing ring(*D, W);
    Weight lam = parse_weight(o.weight, *D);
    if (o.radius <= 0) fail_parse("--radius must be positive");
    BlockChart chart = enumerate_block(D, lam, o.radius);
    BlockStructure st = block_structure(chart);
    KostantTables kt = kostant_tables(chart, W, 2);

    std::optional<BlockCharacters> chars;
    if (o.window >= 0) {
        Window full = default_block_window(chart);
        chars = block_characters(chart, ring, full);
    }
    // Display truncation: each character is cut a fixed depth below its own
    // top weight, so every slot shows its leading layers.
    auto display_cut = [&](const FormalCharacter& ch) {
        if (ch.is_zero()) return ch;
        Weight top = ch.sorted().back().first;
        return CharRing::truncate(ch, Window(chart.borel, top, Rat(o.window)));
    };

    auto layers_json = [](const std::vector<std::vector<ChainSlot>>& layers) {
        json out = json::array();
        for (const auto& layer : layers) {
            json l = json::array();
            for (const auto& s : layer) l.push_back(s.str());
            out.push_back(l);
        }
        return out;
    };
    auto layers_str = [](const std::vector<std::vector<ChainSlot>>& layers) {
        std::string out;
        for (std::size_t i = 0; i < layers.size(); ++i) {
            if (i) out += " ";
            out += "[";
            for (std::size_t k = 0; k < layers[i].size(); ++k) {
                if (k) out += " ";
                out += layers[i][k].str();
            }
            out += "]";
        }
        return out;
    };

    if (o.json_mode) {
        json j = envelope("block", D->spec);
        j["weight"] = weight_json(lam);
        j["quiver"] = chart.quiver == QuiverType::Dinf ? "Dinf" : "Ainfinf";
        j["radius"] = chart.radius;
        json chain = json::array();
        for (const auto& m : chart.chain)
            chain.push_back(json{{"slot", m.slot.str()}, {"weight", weight_json(m.weight)}});
        j["chain"] = chain;
        json kl = json::array();
        for (const auto& entry : st.kac_layers)
            kl.push_back(json{{"slot", entry.first.str()}, {"layers", layers_json(entry.second)}});
        j["kac_layers"] = kl;
        json pl = json::array();
        for (const auto& entry : st.projective_layers)
            pl.push_back(json{{"slot", entry.first.str()}, {"layers", layers_json(entry.second)}});
        j["projective_layers"] = pl;
        j["degree_bound"] = kt.degree_bound;
        auto homology_json = [&](const std::map<ChainSlot, std::vector<std::vector<Weight>>>& t) {
            json rows = json::array();
            for (const auto& entry : t) {
                json degs = json::array();
                for (const auto& ws : entry.second) degs.push_back(weight_list_json(ws));
                rows.push_back(json{{"slot", entry.first.str()}, {"degrees", degs}});
            }
            return rows;
        };
        j["kac_u_homology"] = homology_json(kt.kac_u_homology);
        j["proj_n_cohomology"] = homology_json(kt.proj_n_cohomology);
        json h0 = json::array();
        for (const auto& entry : kt.kac_nbar_h0)
            h0.push_back(json{{"slot", entry.first.str()}, {"weight", weight_json(entry.second)}});
        j["kac_nbar_h0"] = h0;
        if (chars) {
            json c;
            c["window_depth"] = o.window;
            auto char_rows = [&](const std::map<ChainSlot, FormalCharacter>& m) {
                json rows = json::array();
                for (const auto& entry : m)
                    rows.push_back(json{{"slot", entry.first.str()},
                                        {"character", character_json(display_cut(entry.second))}});
                return rows;
            };
            c["kbar"] = char_rows(chars->kbar);
            c["euler"] = char_rows(chars->euler);
            c["simples"] = char_rows(chars->simples);
            c["kac"] = char_rows(chars->kac);
            c["projective"] = char_rows(chars->projective);
            j["characters"] = c;
        }
        emit(j);
        return 0;
    }
    Table head;
    head.row({"algebra", D->spec.str()});
    head.row({"weight", lam.str()});
    head.row({"quiver", chart.quiver == QuiverType::Dinf ? "Dinf" : "Ainfinf"});
    head.row({"radius", std::to_string(chart.radius)});
    head.print(std::cout);
    std::cout << "chain\n";
    Table chain;
    chain.row({"slot", "weight"});
    for (const auto& m : chart.chain) chain.row({m.slot.str(), m.weight.str()});
    chain.print(std::cout);
    std::cout << "kac layers (top first)\n";
    Table kl;
    kl.row({"slot", "layers"});
    for (const auto& entry : st.kac_layers) kl.row({entry.first.str(), layers_str(entry.second)});
    kl.print(std::cout);
    std::cout << "projective layers (top first)\n";
    Table pl;
    pl.row({"slot", "layers"});
    for (const auto& entry : st.projective_layers)
        pl.row({entry.first.str(), layers_str(entry.second)});
    pl.print(std::cout);
    auto homology_table = [&](const char* title,
                              const std::map<ChainSlot, std::vector<std::vector<Weight>>>& t) {
        std::cout << title << " (degrees 0.." << kt.degree_bound << ")\n";
        Table tab;
        tab.row({"slot", "degree", "weights"});
        for (const auto& entry : t)
            for (std::size_t d = 0; d < entry.second.size(); ++d)
                tab.row({entry.first.str(), std::to_string(d), weights_str(entry.second[d])});
        tab.print(std::cout);
    };
    homology_table("kac u-homology", kt.kac_u_homology);
    homology_table("projective n-cohomology", kt.proj_n_cohomology);
    std::cout << "kac nbar-h0\n";
    Table h0;
    h0.row({"slot", "weight"});
    for (const auto& entry : kt.kac_nbar_h0) h0.row({entry.first.str(), entry.second.str()});
    h0.print(std::cout);
    if (chars) {
        auto char_section = [&](const char* title, const std::map<ChainSlot, FormalCharacter>& m) {
            std::cout << title << " (window depth " << o.window << ")\n";
            for (const auto& entry : m) {
                FormalCharacter cut = display_cut(entry.second);
                std::cout << "slot " << entry.first.str() << " (" << cut.size() << " weights)\n";
                Table tab;
                print_character_rows(tab, cut);
                tab.print(std::cout);
            }
        };
        char_section("kbar characters", chars->kbar);
        char_section("euler characters", chars->euler);
        char_section("simple characters", chars->simples);
        char_section("kac characters", chars->kac);
        char_section("projective characters", chars->projective);
    }
    return 0;
}

int run_reciprocity(const CommonOpts& o) {
    o.apply_limit();
    Algebra D = make_algebra(parse_algebra(o.algebra));
    WeylGroup W(*D);
    CharRing ring(*D, W);
    BorelData b = parse_borel(o.borel, *D);
    Weight lam = parse_weight(o.weight, *D);
    ReciprocityReport rep = verify_reciprocity(D, lam, b, W, ring);

    if (o.json_mode) {
        json j = envelope("reciprocity", D->spec);
        j["borel"] = b.label;
        j.update(reciprocity_json(rep));
        emit(j);
        return 0;
    }
    Table head;
    head.row({"algebra", D->spec.str()});
    head.row({"borel", b.label});
    head.row({"weight", lam.str()});
    head.row({"outcome",
              rep.outcome == ReciprocityOutcome::Verified ? "Verified" : "NotApplicable"});
    if (!rep.reason.empty()) head.row({"reason", rep.reason});
    head.print(std::cout);
    if (!rep.coefficients.empty()) {
        std::cout << "coefficients\n";
        Table t;
        t.row({"coeff", "weight"});
        for (const auto& entry : rep.coefficients)
            t.row({std::to_string(entry.second), entry.first.str()});
        t.print(std::cout);
    }
    if (!rep.verdicts.empty()) {
        std::cout << "verdicts\n";
        Table t;
        t.row({"weight", "outcome", "reason"});
        for (const auto& entry : rep.verdicts)
            t.row({entry.first.str(),
                   entry.second.outcome == ReciprocityOutcome::Verified ? "Verified"
                                                                        : "NotApplicable",
                   entry.second.reason.empty() ? "-" : entry.second.reason});
        t.print(std::cout);
    }
    if (!rep.ch_p.is_zero() || !rep.assembled.is_zero()) {
        std::cout << "ch P, direct route (" << rep.ch_p.size() << " weights)\n";
        Table direct;
        print_character_rows(direct, rep.ch_p);
        direct.print(std::cout);
        std::cout << "ch P, row assembly (" << rep.assembled.size() << " weights)\n";
        Table asem;
        print_character_rows(asem, rep.assembled);
        asem.print(std::cout);
    }
    return 0;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_borel, bool with_weight) {
    cmd->add_option("algebra", o.algebra, "algebra label, e.g. gl(2|1) or osp(3|2)")->required();
    if (with_borel)
        cmd->add_option("borel", o.borel,
                        "'distinguished' or a coordinate shuffle like 'e1 d1 e2'");
    if (with_weight)
        cmd->add_option("weight", o.weight, "weight literal, e.g. 2d1+3e1-e2")->required();
    cmd->add_flag("--json", o.json_mode, "emit a schema-versioned JSON document");
    cmd->add_option("--limit", o.limit, "enumeration cap (sets SUPERBBW_LIMIT)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bott-Borel-Weil data for basic classical Lie superalgebras"};
    app.require_subcommand(1);

    CommonOpts roots_opts;
    CLI::App* roots = app.add_subcommand("roots", "root system and Borel summary");
    add_common(roots, roots_opts, true, false);

    WeylOpts weyl_opts;
    CLI::App* weyl = app.add_subcommand("weyl", "Weyl group order, lengths and orbits");
    add_common(weyl, weyl_opts, false, false);
    weyl->add_option("--borel", weyl_opts.borel, "Borel system for the dot action");
    weyl->add_option("--orbit", weyl_opts.orbit, "weight whose orbit to print");
    weyl->add_option("--action", weyl_opts.action, "dot, circle or plain (default dot)");
    weyl->add_option("--jobs", weyl_opts.jobs, "worker threads");

    EulerOpts euler_opts;
    CLI::App* euler = app.add_subcommand("euler", "Euler form of a weight");
    add_common(euler, euler_opts, true, true);
    euler->add_flag("--expand", euler_opts.expand, "also expand into a weight character");
    euler->add_option("--window", euler_opts.window, "expansion window depth");

    CommonOpts generic_opts;
    CLI::App* generic = app.add_subcommand("generic-check", "typicality and genericness report");
    add_common(generic, generic_opts, true, true);
    generic->add_option("--jobs", generic_opts.jobs, "worker threads");

    StarOpts star_opts;
    CLI::App* star = app.add_subcommand("star", "twisted Weyl action with its audit trail");
    add_common(star, star_opts, true, true);
    star->add_option("word", star_opts.word, "Weyl word, e.g. 's1 s2' (rightmost acts first)")
        ->required();

    BbwOpts bbw_opts;
    CLI::App* bbw = app.add_subcommand("bbw", "cohomology of a weight line");
    add_common(bbw, bbw_opts, true, true);
    bbw->add_flag("--parabolic", bbw_opts.parabolic, "target the parabolic radical instead");

    BlockOpts block_opts;
    CLI::App* block = app.add_subcommand("block", "atypical block chart and tables");
    add_common(block, block_opts, false, true);
    block->add_option("--radius", block_opts.radius, "enumeration radius (default 8)");
    block->add_option("--window", block_opts.window, "print characters truncated to this depth");

    CommonOpts recip_opts;
    CLI::App* recip = app.add_subcommand("reciprocity", "projective/Kac coefficient row check");
    add_common(recip, recip_opts, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*roots) return run_roots(roots_opts);
        if (*weyl) return run_weyl(weyl_opts);
        if (*euler) return run_euler(euler_opts);
        if (*generic) return run_generic(generic_opts);
        if (*star) return run_star(star_opts);
        if (*bbw) return run_bbw(bbw_opts);
        if (*block) return run_block(block_opts);
        if (*recip) return run_reciprocity(recip_opts);
    } catch (const SbwError& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Parse: return 2;
            case ErrorKind::Precondition: return 3;
            case ErrorKind::Limit: return 4;
            case ErrorKind::Internal: return 5;
        }
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
