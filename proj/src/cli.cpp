#include "switchhom/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "switchhom/dichotomy.hpp"
#include "switchhom/graph.hpp"
#include "switchhom/homomorphism.hpp"
#include "switchhom/oracle.hpp"
#include "switchhom/perm.hpp"
#include "switchhom/switch_graph.hpp"
#include "switchhom/switching.hpp"

namespace switchhom {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* usage_text =
    "usage: switchhom <command> [args] [--format text|json]\n"
    "commands:\n"
    "  group-info <group>\n"
    "  abelianize <group> <graph>\n"
    "  switch <group> <graph> <sequence>\n"
    "  equiv <group> <graphA> <graphB>\n"
    "  mono <group> <graph>\n"
    "  switchgraph <group> <graph>\n"
    "  decide <group> <graphG> <graphH> [--witness <out>] [--oracle]\n"
    "  check <group> <graphG> <graphH> <witness>\n"
    "  classify <group> <graphH> [--certificate <out>]\n"
    "  indicator <graph> <i> <j>\n"
    "  thm7 <group> <graphH>\n";

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    std::vector<std::string> positional;
    bool json_format = false;
    bool oracle = false;
    std::optional<std::string> witness_path;
    std::optional<std::string> certificate_path;
};

Options parse_options(const std::vector<std::string>& args) {
    Options opt;
    if (args.empty()) throw usage_error("missing command");
    opt.command = args.front();
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&](const char* flag) -> const std::string& {
            if (++i >= args.size())
                throw usage_error(std::string(flag) + " requires a value");
            return args[i];
        };
        if (a == "--format") {
            const std::string& v = value("--format");
            if (v == "json")
                opt.json_format = true;
            else if (v != "text")
                throw usage_error("unknown format: " + v);
        } else if (a == "--oracle") {
            opt.oracle = true;
        } else if (a == "--witness") {
            opt.witness_path = value("--witness");
        } else if (a == "--certificate") {
            opt.certificate_path = value("--certificate");
        } else if (a.rfind("--", 0) == 0) {
            throw usage_error("unknown flag: " + a);
        } else {
            opt.positional.push_back(a);
        }
    }
    return opt;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

PermGroup load_group(const std::string& path) { return parse_group(read_file(path)); }
EdgeColouredGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void require_group_sequence(const PermGroup& gamma, const SwitchSequence& sigma) {
    for (const Switch& s : sigma)
        if (!gamma.contains(s.perm))
            throw std::invalid_argument("sequence permutation " + s.perm.to_cycles() +
                                        " is not a group element");
}

json graph_json(const EdgeColouredGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.colour});
    return json{{"m", g.m()}, {"n", g.n()}, {"edges", std::move(edges)}};
}

json sequence_json(const SwitchSequence& sigma) {
    json result = json::array();
    for (const Switch& s : sigma)
        result.push_back(json{{"vertex", s.vertex}, {"perm", s.perm.to_cycles()}});
    return result;
}

json blocks_json(const BlockSystem& blocks) {
    json result = json::array();
    for (const auto& block : blocks.blocks) result.push_back(block);
    return result;
}

void print_blocks(std::ostream& out, const BlockSystem& blocks) {
    for (int label = 1; label <= blocks.block_count(); ++label) {
        out << "block " << label << ": {";
        const auto& block = blocks.block(label);
        for (std::size_t t = 0; t < block.size(); ++t) out << (t ? ", " : "") << block[t];
        out << "}\n";
    }
}

void emit(std::ostream& out, const Options& opt, const std::string& text, const json& mirror) {
    if (opt.json_format)
        out << mirror.dump(2) << '\n';
    else
        out << text;
}

int cmd_group_info(const Options& opt, std::ostream& out) {
    PermGroup gamma = load_group(opt.positional.at(0));
    GroupProperties props = gamma.properties();
    PermGroup derived = commutator_subgroup(gamma);

    std::ostringstream text;
    json mirror{{"command", "group-info"},
                {"degree", gamma.degree()},
                {"order", props.order},
                {"transitive", props.is_transitive},
                {"abelian", props.is_abelian},
                {"regular", props.is_regular},
                {"commutator-order", derived.order()}};
    text << "GROUP degree=" << gamma.degree() << " order=" << props.order
         << " transitive=" << (props.is_transitive ? "yes" : "no")
         << " abelian=" << (props.is_abelian ? "yes" : "no")
         << " regular=" << (props.is_regular ? "yes" : "no")
         << " commutator-order=" << derived.order();
    std::optional<Abelianization> ab;
    if (props.is_transitive) {
        ab = abelianization(gamma);
        text << " blocks=" << ab->blocks.block_count();
        mirror["blocks"] = ab->blocks.block_count();
    }
    text << "\n---\n";
    text << "generators:\n";
    json generators = json::array();
    for (const Permutation& g : gamma.generators()) {
        text << g.to_cycles() << '\n';
        generators.push_back(g.to_cycles());
    }
    mirror["generators"] = std::move(generators);
    if (ab) {
        print_blocks(text, ab->blocks);
        mirror["block-table"] = blocks_json(ab->blocks);
        text << "quotient generators:\n";
        json quotient = json::array();
        for (const Permutation& g : ab->quotient.generators()) {
            text << g.to_cycles() << '\n';
            quotient.push_back(g.to_cycles());
        }
        mirror["quotient-generators"] = std::move(quotient);
    }
    emit(out, opt, text.str(), mirror);
    return 0;
}

int cmd_abelianize(const Options& opt, std::ostream& out) {
    PermGroup gamma = load_group(opt.positional.at(0));
    EdgeColouredGraph g = load_graph(opt.positional.at(1));
    Abelianization ab = abelianization(gamma);
    EdgeColouredGraph ga = abelianize_graph(g, ab.blocks);

    std::ostringstream text;
    text << "ABELIANIZED blocks=" << ab.blocks.block_count() << "\n---\n";
    print_blocks(text, ab.blocks);
    text << "quotient:\n" << serialize_group(ab.quotient);
    text << "graph:\n" << serialize_graph(ga);
    json quotient_generators = json::array();
    for (const Permutation& q : ab.quotient.generators())
        quotient_generators.push_back(q.to_cycles());
    json mirror{{"command", "abelianize"},
                {"blocks", blocks_json(ab.blocks)},
                {"quotient",
                 json{{"degree", ab.quotient.degree()},
                      {"generators", std::move(quotient_generators)}}},
                {"graph", graph_json(ga)}};
    emit(out, opt, text.str(), mirror);
    return 0;
}

int cmd_switch(const Options& opt, std::ostream& out) {
    PermGroup gamma = load_group(opt.positional.at(0));
    EdgeColouredGraph g = load_graph(opt.positional.at(1));
    SwitchSequence sigma = parse_sequence(read_file(opt.positional.at(2)), g.m());
    require_group_sequence(gamma, sigma);
    EdgeColouredGraph switched = apply_sequence(g, sigma);
    emit(out, opt, serialize_graph(switched),
         json{{"command", "switch"}, {"graph", graph_json(switched)}});
    return 0;
}

int cmd_equiv(const Options& opt, std::ostream& out) {
    PermGroup gamma = load_group(opt.positional.at(0));
    EdgeColouredGraph a = load_graph(opt.positional.at(1));
    EdgeColouredGraph b = load_graph(opt.positional.at(2));
    auto sigma = switch_equivalent(a, b, gamma);

    std::ostringstream text;
    json mirror{{"command", "equiv"}};
    if (sigma) {
        text << "YES\n---\nsequence:\n" << serialize_sequence(*sigma);
        mirror["answer"] = "YES";
        mirror["sequence"] = sequence_json(*sigma);
    } else {
        text << "NO\n";
        mirror["answer"] = "NO";
    }
    emit(out, opt, text.str(), mirror);
    return sigma ? 0 : 1;
}

int cmd_mono(const Options& opt, std::ostream& out) {
    PermGroup gamma = load_group(opt.positional.at(0));
    EdgeColouredGraph g = load_graph(opt.positional.at(1));
    Abelianization ab = abelianization(gamma);
    EdgeColouredGraph ga = abelianize_graph(g, ab.blocks);
    auto mono = can_switch_monochromatic(ga, ab.quotient);

    std::ostringstream text;
    json mirror{{"command", "mono"}};
    if (mono) {
        text << "YES colour=" << mono->colour << "\n---\n";
        text << "the Abelianized graph switches to block colour " << mono->colour << " by:\n";
        text << serialize_sequence(mono->sequence);
        mirror["answer"] = "YES";
        mirror["colour"] = mono->colour;
        mirror["sequence"] = sequence_json(mono->sequence);
    } else {
        text << "NO\n";
        mirror["answer"] = "NO";
    }
    emit(out, opt, text.str(), mirror);
    return mono ? 0 : 1;
}

int cmd_switchgraph(const Options& opt, std::ostream& out) {
    PermGroup gamma = load_group(opt.positional.at(0));
    EdgeColouredGraph g = load_graph(opt.positional.at(1));
    SwitchGraph sw = build_switch_graph(g, gamma);
    json labels = json::array();
    for (int flat = 0; flat < sw.product.n(); ++flat) {
        auto [vertex, index] = sw.label(flat);
        labels.push_back(json{{"id", flat},
                              {"vertex", vertex},
                              {"element", sw.group.element(index).to_cycles()}});
    }
    emit(out, opt, serialize_switch_graph(sw),
         json{{"command", "switchgraph"},
              {"labels", std::move(labels)},
              {"graph", graph_json(sw.product)}});
    return 0;
}

int cmd_decide(const Options& opt, std::ostream& out) {
    PermGroup gamma = load_group(opt.positional.at(0));
    EdgeColouredGraph g = load_graph(opt.positional.at(1));
    EdgeColouredGraph h = load_graph(opt.positional.at(2));

    std::ostringstream text;
    json mirror{{"command", "decide"}, {"oracle", opt.oracle}};
    bool yes;
    if (opt.oracle) {
        if (opt.witness_path)
            throw usage_error("--witness is not available with --oracle");
        yes = brute_decide(g, h, gamma);
        text << (yes ? "YES" : "NO") << '\n';
        mirror["answer"] = yes ? "YES" : "NO";
    } else {
        auto witness = decide_switch_hom(g, h, gamma);
        yes = witness.has_value();
        mirror["answer"] = yes ? "YES" : "NO";
        if (witness) {
            text << "YES\n---\nwitness:\n" << serialize_witness(*witness);
            mirror["sequence"] = sequence_json(witness->sequence);
            mirror["mapping"] = witness->mapping;
            if (opt.witness_path) write_file(*opt.witness_path, serialize_witness(*witness));
        } else {
            text << "NO\n";
        }
    }
    emit(out, opt, text.str(), mirror);
    return yes ? 0 : 1;
}

int cmd_check(const Options& opt, std::ostream& out) {
    PermGroup gamma = load_group(opt.positional.at(0));
    EdgeColouredGraph g = load_graph(opt.positional.at(1));
    EdgeColouredGraph h = load_graph(opt.positional.at(2));
    Witness w = parse_witness(read_file(opt.positional.at(3)), g.m());
    bool ok = check_witness(g, h, gamma, w);
    emit(out, opt, std::string(ok ? "YES\n" : "NO\n"),
         json{{"command", "check"}, {"answer", ok ? "YES" : "NO"}});
    return ok ? 0 : 1;
}

std::string certificate_file(const Certificate& cert) {
    std::ostringstream out;
    if (cert.kind == CertificateKind::ODD_CYCLE) {
        out << "kind odd-cycle\ncycle";
        for (int v : cert.cycle) out << ' ' << v;
        out << '\n';
        return out.str();
    }
    out << "kind nearly-mono-even-cycle\n";
    out << "pair " << cert.colour_k << ' ' << cert.colour_l << '\n';
    out << "cycle";
    for (int v : cert.cycle) out << ' ' << v;
    out << '\n';
    out << "cotree-edge " << cert.cotree_u << ' ' << cert.cotree_v << '\n';
    out << "sequence\n" << serialize_sequence(cert.switches);
    return out.str();
}

json certificate_json(const Certificate& cert) {
    if (cert.kind == CertificateKind::ODD_CYCLE)
        return json{{"kind", "odd-cycle"}, {"cycle", cert.cycle}};
    return json{{"kind", "nearly-mono-even-cycle"},
                {"pair", {cert.colour_k, cert.colour_l}},
                {"cycle", cert.cycle},
                {"cotree-edge", {cert.cotree_u, cert.cotree_v}},
                {"switches", sequence_json(cert.switches)}};
}

std::string verdict_first_line(const Verdict& verdict) {
    std::ostringstream line;
    if (verdict.kind == VerdictKind::POLYNOMIAL) {
        line << "POLYNOMIAL ";
        if (verdict.reason == PolynomialReason::EDGELESS)
            line << "edgeless";
        else
            line << "mono-bipartite colour=Δ" << verdict.mono_colour;
    } else if (verdict.certificate->kind == CertificateKind::ODD_CYCLE) {
        line << "NP-COMPLETE odd-cycle length=" << verdict.certificate->cycle.size() - 1;
    } else {
        line << "NP-COMPLETE nearly-monochromatic (Δ" << verdict.certificate->colour_k
             << ",Δ" << verdict.certificate->colour_l << ")";
    }
    return line.str();
}

json verdict_json(const Verdict& verdict) {
    json mirror;
    if (verdict.kind == VerdictKind::POLYNOMIAL) {
        mirror["verdict"] = "POLYNOMIAL";
        if (verdict.reason == PolynomialReason::EDGELESS) {
            mirror["reason"] = "edgeless";
        } else {
            mirror["reason"] = "mono-bipartite";
            mirror["colour"] = verdict.mono_colour;
            mirror["sequence"] = sequence_json(verdict.mono_sequence);
        }
    } else {
        mirror["verdict"] = "NP-COMPLETE";
        mirror["certificate"] = certificate_json(*verdict.certificate);
    }
    return mirror;
}

int cmd_classify(const Options& opt, std::ostream& out) {
    PermGroup gamma = load_group(opt.positional.at(0));
    EdgeColouredGraph h = load_graph(opt.positional.at(1));
    Verdict verdict = classify_target(h, gamma);

    std::ostringstream text;
    text << verdict_first_line(verdict) << '\n';
    if (verdict.kind == VerdictKind::POLYNOMIAL) {
        if (verdict.reason == PolynomialReason::MONO_BIPARTITE) {
            text << "---\n";
            text << "the Abelianized target switches to block colour " << verdict.mono_colour
                 << " by:\n";
            text << serialize_sequence(verdict.mono_sequence);
        }
    } else {
        const Certificate& cert = *verdict.certificate;
        text << "---\n";
        if (cert.kind == CertificateKind::ODD_CYCLE) {
            text << "odd cycle:";
            for (int v : cert.cycle) text << ' ' << v;
            text << '\n';
        } else {
            text << "nearly monochromatic cycle in the Abelianized target:";
            for (int v : cert.cycle) text << ' ' << v;
            text << '\n';
            text << "co-tree edge: " << cert.cotree_u << ' ' << cert.cotree_v << '\n';
            text << "switches:\n" << serialize_sequence(cert.switches);
        }
        if (opt.certificate_path) write_file(*opt.certificate_path, certificate_file(cert));
    }
    json mirror{{"command", "classify"}};
    mirror.update(verdict_json(verdict));
    emit(out, opt, text.str(), mirror);
    return verdict.kind == VerdictKind::POLYNOMIAL ? 0 : 1;
}

int cmd_indicator(const Options& opt, std::ostream& out) {
    EdgeColouredGraph g = load_graph(opt.positional.at(0));
    int i = std::stoi(opt.positional.at(1));
    int j = std::stoi(opt.positional.at(2));
    IndicatorDigraph d = indicator_construction(g, i, j);
    json arcs = json::array();
    for (auto [x, y] : d.arcs) arcs.push_back({x, y});
    emit(out, opt, serialize_digraph(d),
         json{{"command", "indicator"}, {"n", d.n}, {"arcs", std::move(arcs)}});
    return 0;
}

int cmd_thm7(const Options& opt, std::ostream& out) {
    PermGroup gamma = load_group(opt.positional.at(0));
    EdgeColouredGraph h = load_graph(opt.positional.at(1));
    Verdict verdict = classify_target(h, gamma);

    json mirror{{"command", "thm7"}};
    mirror.update(verdict_json(verdict));
    if (verdict.kind == VerdictKind::POLYNOMIAL) {
        std::string text = verdict_first_line(verdict) +
                           "\n---\nno hardness construction applies to a polynomial target\n";
        emit(out, opt, text, mirror);
        return 0;
    }
    if (verdict.certificate->kind == CertificateKind::ODD_CYCLE) {
        std::ostringstream text;
        text << verdict_first_line(verdict) << "\n---\n";
        text << "hardness is already witnessed by the odd cycle:";
        for (int v : verdict.certificate->cycle) text << ' ' << v;
        text << '\n';
        emit(out, opt, text.str(), mirror);
        return 1;
    }

    Theorem7Report report = theorem7_report(h, gamma);
    std::ostringstream first;
    first << verdict_first_line(verdict) << " d=" << report.cycles.d << " k=" << report.cycles.k
          << " C1=" << report.cycles.c1.size() << " C2=" << report.cycles.c2.size()
          << " smooth=" << (report.periods.is_smooth ? "yes" : "no")
          << " coprime=" << (report.periods.has_coprime_cycles ? "yes" : "no");

    std::ostringstream text;
    text << first.str() << "\n---\n";
    text << "nearly monochromatic cycle:";
    for (int v : report.certificate.cycle) text << ' ' << v;
    text << '\n';
    text << "switches:\n" << serialize_sequence(report.certificate.switches);
    auto print_cycle = [&](const char* name, const std::vector<std::pair<int, Permutation>>& c) {
        text << name << ":";
        for (const auto& [v, p] : c) text << " (" << v << "," << p.to_cycles() << ")";
        text << '\n';
    };
    print_cycle("C1", report.cycles.c1);
    print_cycle("C2", report.cycles.c2);
    text << "periods:";
    for (int p : report.periods.periods) text << ' ' << p;
    text << '\n';

    auto cycle_json = [](const std::vector<std::pair<int, Permutation>>& c) {
        json result = json::array();
        for (const auto& [v, p] : c)
            result.push_back(json{{"vertex", v}, {"element", p.to_cycles()}});
        return result;
    };
    mirror["d"] = report.cycles.d;
    mirror["k"] = report.cycles.k;
    mirror["c1"] = cycle_json(report.cycles.c1);
    mirror["c2"] = cycle_json(report.cycles.c2);
    mirror["smooth"] = report.periods.is_smooth;
    mirror["periods"] = report.periods.periods;
    mirror["coprime"] = report.periods.has_coprime_cycles;
    emit(out, opt, text.str(), mirror);
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    try {
        opt = parse_options(args);
        struct Entry {
            const char* name;
            std::size_t arity;
            int (*handler)(const Options&, std::ostream&);
        };
        static constexpr Entry table[] = {
            {"group-info", 1, cmd_group_info}, {"abelianize", 2, cmd_abelianize},
            {"switch", 3, cmd_switch},         {"equiv", 3, cmd_equiv},
            {"mono", 2, cmd_mono},             {"switchgraph", 2, cmd_switchgraph},
            {"decide", 3, cmd_decide},         {"check", 4, cmd_check},
            {"classify", 2, cmd_classify},     {"indicator", 3, cmd_indicator},
            {"thm7", 2, cmd_thm7},
        };
        for (const Entry& entry : table) {
            if (opt.command != entry.name) continue;
            if (opt.positional.size() != entry.arity)
                throw usage_error(opt.command + " expects " + std::to_string(entry.arity) +
                                  " arguments");
            return entry.handler(opt, out);
        }
        throw usage_error("unknown command: " + opt.command);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n' << usage_text;
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace switchhom
