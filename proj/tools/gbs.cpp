// gbs: generating sets for the lower-central-series intersection and the
// residual-p kernel of a GBS tree group, with supporting exact algebra.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbs/abelian.hpp"
#include "gbs/arith.hpp"
#include "gbs/center.hpp"
#include "gbs/gamma.hpp"
#include "gbs/notes.hpp"
#include "gbs/np.hpp"
#include "gbs/oracle.hpp"
#include "gbs/tree.hpp"
#include "gbs/words.hpp"

// sorted object keys keep the serialization stable across runs
using json = nlohmann::json;

namespace {

constexpr int EXIT_INPUT_ERROR = 2;
constexpr int EXIT_WITNESS_FOUND = 3;

std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fnv1a_digest(const std::string &data)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Output document shared by the text and JSON modes; both render the same
// payload so the reported element multisets always agree.
struct OutputDocument {
    std::string command;
    std::string input_digest;
    json result = json::object();
    std::vector<std::string> warnings;

    json to_json() const
    {
        json doc;
        doc["command"] = command;
        doc["input_digest"] = input_digest;
        doc["result"] = result;
        doc["warnings"] = warnings;
        return doc;
    }
};

void emit(const OutputDocument &doc, bool as_json, const std::string &text)
{
    if (as_json) {
        std::cout << doc.to_json().dump(2) << "\n";
    } else {
        std::cout << text;
        for (const std::string &w : doc.warnings)
            std::cout << "warning: " << w << "\n";
    }
}

gbs::LabeledTree load_tree(const std::string &path, OutputDocument &doc)
{
    std::string text = slurp(path);
    doc.input_digest = fnv1a_digest(text);
    gbs::LabeledTree raw = gbs::parse_tree(text);
    gbs::LabeledTree tree = gbs::normalize_signs(raw);
    if (raw.edges != tree.edges)
        doc.warnings.push_back("negative labels were removed by admissible sign changes");
    for (const std::string &n : gbs::advisory_notes(tree))
        doc.warnings.push_back(n);
    if (tree.vertices.size() == 1)
        doc.warnings.push_back("single-vertex tree: the group is Z, gamma_omega and (N_p)_omega "
                               "are trivial and the center is the whole group");
    return tree;
}

json pair_header(const gbs::LabeledTree &tree, std::size_t u, std::size_t v,
                 const gbs::Int &k, const gbs::Int &l)
{
    json j;
    j["left"] = tree.vertices[u];
    j["right"] = tree.vertices[v];
    j["k"] = k.get_str();
    j["l"] = l.get_str();
    j["relation"] = tree.vertices[u] + "^" + k.get_str() + " = " + tree.vertices[v] + "^" +
                    l.get_str();
    return j;
}

gbs::Int env_max_order()
{
    if (const char *env = std::getenv("GBS_ORACLE_MAX_ORDER"))
        return gbs::parse_int(env);
    return 27;
}

int cmd_center(const std::string &file, bool as_json)
{
    OutputDocument doc;
    doc.command = "center";
    gbs::LabeledTree tree = load_tree(file, doc);
    gbs::CenterData cd = gbs::center_exponents(tree);
    std::vector<gbs::Int> images = gbs::modulus_hom(tree);
    gbs::Int r = 1;
    for (const gbs::Int &rv : cd.exponents)
        r = gbs::lcm(r, rv);

    json exps = json::object(), homs = json::object();
    std::ostringstream text;
    text << "center exponents:";
    for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
        exps[tree.vertices[v]] = cd.exponents[v].get_str();
        homs[tree.vertices[v]] = images[v].get_str();
        text << " " << tree.vertices[v] << ":" << cd.exponents[v].get_str();
    }
    text << "\nmodulus r = " << r.get_str() << "\nmodulus homomorphism images:";
    for (std::size_t v = 0; v < tree.vertices.size(); ++v)
        text << " " << tree.vertices[v] << ":" << images[v].get_str();
    text << "\n";

    doc.result["exponents"] = exps;
    doc.result["modulus"] = r.get_str();
    doc.result["hom_images"] = homs;
    doc.result["whole_group"] = cd.whole_group;
    emit(doc, as_json, text.str());
    return 0;
}

int cmd_gamma(const std::string &file, const std::string &mode_name, bool keep_trivial,
              bool as_json)
{
    OutputDocument doc;
    doc.command = "gamma-omega";
    gbs::LabeledTree tree = load_tree(file, doc);
    gbs::GammaMode mode =
        mode_name == "path" ? gbs::GammaMode::path : gbs::GammaMode::center_order;
    gbs::GammaTreeResult res = gbs::gamma_omega_tree(tree, mode, !keep_trivial);

    if (!res.degenerate && res.elements.empty()) {
        if (tree.vertices.size() == 2 &&
            gbs::is_residually_nilpotent_segment(tree.edges[0].label_u, tree.edges[0].label_v))
            doc.warnings.push_back("labels are powers of one prime: the group is residually "
                                   "nilpotent, gamma_omega is trivial");
        else
            doc.warnings.push_back("empty generating set: the group is residually nilpotent");
    }
    if (tree.vertices.size() == 2 &&
        gbs::gamma_is_commutator_subgroup(tree.edges[0].label_u, tree.edges[0].label_v))
        doc.warnings.push_back("coprime labels: gamma_omega equals the commutator subgroup G'");

    std::ostringstream text;
    text << "mode: " << (mode == gbs::GammaMode::path ? "path" : "center-order") << "\n";
    json pairs = json::array(), elements = json::array();
    for (const gbs::GammaPairBlock &blk : res.pairs) {
        json pj = pair_header(tree, blk.u, blk.v, blk.k, blk.l);
        json elems = json::array(), dropped = json::array();
        text << "pair (" << tree.vertices[blk.u] << ", " << tree.vertices[blk.v] << ") at ("
             << blk.k.get_str() << ", " << blk.l.get_str() << "):";
        for (const gbs::Commutator &c : blk.elements) {
            elems.push_back(gbs::to_string(c));
            text << "  " << gbs::to_string(c);
        }
        for (const gbs::Commutator &c : blk.dropped)
            dropped.push_back(gbs::to_string(c));
        if (blk.elements.empty())
            text << "  (empty)";
        text << "\n";
        pj["elements"] = elems;
        pj["dropped_trivial"] = dropped;
        pairs.push_back(pj);
    }
    text << "gamma_omega generators (" << res.elements.size() << "):\n";
    for (const gbs::Commutator &c : res.elements) {
        elements.push_back(gbs::to_string(c));
        text << "  " << gbs::to_string(c) << "\n";
    }

    doc.result["mode"] = mode == gbs::GammaMode::path ? "path" : "center-order";
    doc.result["filtered"] = !keep_trivial;
    doc.result["degenerate"] = res.degenerate;
    doc.result["pairs"] = pairs;
    doc.result["elements"] = elements;
    emit(doc, as_json, text.str());
    return 0;
}

int cmd_np(const std::string &file, const gbs::Int &p, bool certify, bool staged, bool as_json)
{
    OutputDocument doc;
    doc.command = "np-omega";
    gbs::LabeledTree tree = load_tree(file, doc);
    gbs::NpTreeResult res = gbs::np_omega_tree(tree, p);

    if (!res.degenerate && res.elements.empty())
        doc.warnings.push_back("empty generating set: the group is residually a finite " +
                               p.get_str() + "-group");

    std::ostringstream text;
    text << "prime p = " << p.get_str() << "\n";
    json pairs = json::array(), elements = json::array();
    for (const gbs::NpPairBlock &blk : res.pairs) {
        json pj = pair_header(tree, blk.u, blk.v, blk.k, blk.l);
        json elems = json::array(), dropped = json::array();
        text << "H_" << tree.vertices[blk.u] << "^" << tree.vertices[blk.v] << " ("
             << pj["relation"].get<std::string>() << "):";
        for (const gbs::SetElement &e : blk.elements) {
            elems.push_back(e.str());
            text << "  " << e.str();
        }
        for (const gbs::SetElement &e : blk.dropped)
            dropped.push_back(e.str());
        if (blk.elements.empty())
            text << "  (empty)";
        text << "\n";
        pj["elements"] = elems;
        pj["dropped_trivial"] = dropped;
        pairs.push_back(pj);
    }
    text << "(N_" << p.get_str() << ")_omega generators (" << res.elements.size() << "):\n";
    for (const gbs::SetElement &e : res.elements) {
        elements.push_back(e.str());
        text << "  " << e.str() << "\n";
    }
    doc.result["p"] = p.get_str();
    doc.result["degenerate"] = res.degenerate;
    doc.result["pairs"] = pairs;
    doc.result["elements"] = elements;

    if (staged && !res.degenerate) {
        // stage-1 power words from adjacent pairs only
        json stage = json::array();
        text << "stage 1 (adjacent pairs):\n";
        for (const gbs::LabeledTree::Edge &e : tree.edges) {
            gbs::NpSegmentData d = gbs::np_segment_data(e.label_u, e.label_v, p);
            if (d.d1 == 1)
                continue;
            gbs::SetElement el{gbs::SetElement::Kind::power_word, tree.vertices[e.u],
                               e.label_u / d.d1, tree.vertices[e.v], e.label_v / d.d1};
            stage.push_back(el.str());
            text << "  " << el.str() << "\n";
        }
        doc.result["stage1"] = stage;
    }

    if (certify && !res.degenerate) {
        gbs::IntMatrix a = gbs::np_quotient_matrix(tree, p);
        gbs::AbelianInvariants ainv = gbs::invariants_of(a);
        gbs::CentralSubgroupData cs = gbs::np_central_subgroup_matrix(tree, p);
        gbs::AbelianInvariants binv = gbs::invariants_of(cs.rows);

        json cert;
        cert["quotient_rows"] = json::array();
        for (std::size_t i = 0; i < a.rows; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < a.cols; ++j)
                row.push_back(a.at(i, j).get_str());
            cert["quotient_rows"].push_back(row);
        }
        cert["quotient_abelianization"] = ainv.str();
        json mexp = json::object();
        for (std::size_t v = 0; v < tree.vertices.size(); ++v)
            mexp[tree.vertices[v]] = cs.m[v];
        cert["central_subgroup_exponents"] = mexp;
        cert["central_subgroup_rows"] = json::array();
        for (std::size_t i = 0; i < cs.rows.rows; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < cs.rows.cols; ++j)
                row.push_back(cs.rows.at(i, j).get_str());
            cert["central_subgroup_rows"].push_back(row);
        }
        cert["central_subgroup"] = binv.str();
        doc.result["certificate"] = cert;

        text << "quotient abelianization: " << ainv.str() << "\n";
        text << "central subgroup ";
        for (std::size_t v = 0; v < tree.vertices.size(); ++v)
            text << (v ? ", " : "<") << tree.vertices[v] << "^" << p.get_str() << "^" << cs.m[v];
        text << ">: " << binv.str() << "\n";
    }
    emit(doc, as_json, text.str());
    return 0;
}

int cmd_abelianization(const std::string &file, const gbs::Int &np_prime, bool adjoin_gamma,
                       bool as_json)
{
    OutputDocument doc;
    doc.command = "abelianization";
    gbs::LabeledTree tree = load_tree(file, doc);
    gbs::Presentation pres = gbs::standard_presentation(tree);
    std::string adjoined = "none";
    if (np_prime != 0) {
        gbs::NpTreeResult res = gbs::np_omega_tree(tree, np_prime);
        for (const gbs::NpPairBlock &blk : res.pairs) {
            for (const gbs::SetElement &e : blk.elements)
                pres.relators.push_back(e.word());
            for (const gbs::SetElement &e : blk.dropped)
                pres.relators.push_back(e.word());
        }
        adjoined = "np-omega set, p = " + np_prime.get_str();
    } else if (adjoin_gamma) {
        gbs::GammaTreeResult res = gbs::gamma_omega_tree(tree);
        for (const gbs::GammaPairBlock &blk : res.pairs) {
            for (const gbs::Commutator &c : blk.elements)
                pres.relators.push_back(c.word());
            for (const gbs::Commutator &c : blk.dropped)
                pres.relators.push_back(c.word());
        }
        adjoined = "gamma-omega set";
    }
    gbs::IntMatrix m = gbs::exponent_matrix(pres);
    gbs::AbelianInvariants inv = gbs::invariants_of(m);

    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j)
            row.push_back(m.at(i, j).get_str());
        rows.push_back(row);
    }
    doc.result["adjoined"] = adjoined;
    doc.result["relation_matrix"] = rows;
    doc.result["free_rank"] = inv.free_rank;
    json tor = json::array();
    for (const gbs::Int &t : inv.torsion)
        tor.push_back(t.get_str());
    doc.result["torsion"] = tor;
    doc.result["group"] = inv.str();

    std::ostringstream text;
    text << "adjoined relators: " << adjoined << "\n";
    text << "abelianization: " << inv.str() << "\n";
    emit(doc, as_json, text.str());
    return 0;
}

int cmd_snf(const std::string &file, bool certify, bool as_json)
{
    OutputDocument doc;
    doc.command = "snf";
    std::string textin = slurp(file);
    doc.input_digest = fnv1a_digest(textin);
    gbs::IntMatrix m = gbs::parse_matrix(textin);
    gbs::SmithDecomposition snf = gbs::smith_normal_form(m);
    if (!snf.verify(m))
        throw std::logic_error("smith normal form certificate failed");
    gbs::AbelianInvariants inv = gbs::invariants_of(m);

    auto matrix_json = [](const gbs::IntMatrix &x) {
        json rows = json::array();
        for (std::size_t i = 0; i < x.rows; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < x.cols; ++j)
                row.push_back(x.at(i, j).get_str());
            rows.push_back(row);
        }
        return rows;
    };

    json diag = json::array();
    for (const gbs::Int &d : snf.diagonal())
        diag.push_back(d.get_str());
    doc.result["diagonal"] = diag;
    doc.result["S"] = matrix_json(snf.s);
    if (certify) {
        doc.result["U"] = matrix_json(snf.u);
        doc.result["V"] = matrix_json(snf.v);
        doc.result["det_U"] = snf.det_u;
        doc.result["det_V"] = snf.det_v;
        doc.result["certified"] = true;
    }
    doc.result["invariants"] = inv.str();

    std::ostringstream text;
    text << "diagonal:";
    for (const gbs::Int &d : snf.diagonal())
        text << " " << d.get_str();
    text << "\ninvariants: " << inv.str() << "\n";
    if (certify) {
        text << "S =\n" << gbs::format_matrix(snf.s);
        text << "U (det " << snf.det_u << ") =\n" << gbs::format_matrix(snf.u);
        text << "V (det " << snf.det_v << ") =\n" << gbs::format_matrix(snf.v);
        text << "certificate U*A*V = S verified\n";
    }
    emit(doc, as_json, text.str());
    return 0;
}

int cmd_check(const std::string &file, const std::string &word_text, const std::string &mode,
              const gbs::Int &p, const gbs::Int &max_order, bool expect_member, bool as_json)
{
    OutputDocument doc;
    doc.command = "check";
    gbs::LabeledTree tree = load_tree(file, doc);
    gbs::GroupWord w = gbs::parse_word(word_text);
    for (const gbs::Syllable &s : w.syllables)
        tree.index_of(s.gen); // unknown generator: input error

    gbs::AnnihilationResult res;
    if (mode == "np") {
        res = gbs::annihilation_check_p(tree, w, p, max_order);
    } else {
        std::vector<gbs::Int> primes{2, 3, 5, 7};
        res = gbs::annihilation_check(tree, w, gbs::build_catalog(max_order, primes));
    }

    doc.result["element"] = gbs::to_string(w);
    doc.result["mode"] = mode;
    doc.result["max_order"] = max_order.get_str();
    if (mode == "np")
        doc.result["p"] = p.get_str();
    doc.result["annihilated"] = res.annihilated;

    std::ostringstream text;
    if (res.annihilated) {
        text << "no witness up to order " << max_order.get_str()
             << ": the element dies in every enumerated "
             << (mode == "np" ? p.get_str() + "-group" : "nilpotent") << " image\n"
             << "(necessary condition only; the catalog is finite)\n";
    } else {
        json wit;
        wit["target"] = res.witness_tag;
        json imgs = json::object();
        for (std::size_t v = 0; v < tree.vertices.size(); ++v)
            imgs[tree.vertices[v]] = res.witness.images[v];
        wit["images"] = imgs;
        wit["element_image"] = res.witness_image;
        doc.result["witness"] = wit;
        text << "witness found in " << res.witness_tag << ":";
        for (std::size_t v = 0; v < tree.vertices.size(); ++v)
            text << " " << tree.vertices[v] << " -> " << res.witness.images[v];
        text << "; element image " << res.witness_image << " != identity\n";
    }
    emit(doc, as_json, text.str());
    return (!res.annihilated && expect_member) ? EXIT_WITNESS_FOUND : 0;
}

int cmd_reduce_word(const std::string &file, const std::string &word_text, bool as_json)
{
    OutputDocument doc;
    doc.command = "reduce-word";
    gbs::LabeledTree tree = load_tree(file, doc);
    gbs::GroupWord w = gbs::parse_word(word_text);
    gbs::GroupWord nf = gbs::normal_form(tree, w);

    doc.result["input"] = gbs::to_string(w);
    doc.result["normal_form"] = gbs::to_string(nf);
    doc.result["trivial"] = nf.empty();

    std::ostringstream text;
    text << "normal form: " << gbs::to_string(nf) << "\n"
         << (nf.empty() ? "the element is trivial\n" : "the element is nontrivial\n");
    emit(doc, as_json, text.str());
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"generating sets for gamma_omega and (N_p)_omega of GBS tree groups"};
    app.require_subcommand(1);

    std::string file, word_text, mode = "center-order", check_mode = "gamma";
    std::string prime_text = "0", max_order_text;
    bool as_json = false, keep_trivial = false, certify = false, staged = false;
    bool adjoin_gamma = false, expect_member = false;

    auto *center = app.add_subcommand("center", "center exponents and the modulus homomorphism");
    center->add_option("file", file)->required();
    center->add_flag("--json", as_json);

    auto *gamma = app.add_subcommand("gamma-omega", "generators of gamma_omega(G)");
    gamma->add_option("file", file)->required();
    gamma->add_option("--mode", mode)->check(CLI::IsMember({"path", "center-order"}));
    gamma->add_flag("--keep-trivial", keep_trivial, "disable the trivial-element filter");
    gamma->add_flag("--json", as_json);

    auto *np = app.add_subcommand("np-omega", "generators of (N_p)_omega(G)");
    np->add_option("file", file)->required();
    np->add_option("-p,--prime", prime_text, "the prime p")->required();
    np->add_flag("--certify", certify, "abelianization certificates of the quotient");
    np->add_flag("--staged", staged, "also print the stage-1 adjacent-pair elements");
    np->add_flag("--json", as_json);

    auto *ab = app.add_subcommand("abelianization", "abelianization of the presentation");
    ab->add_option("file", file)->required();
    ab->add_option("--np", prime_text, "adjoin the (N_p)_omega set as extra relators");
    ab->add_flag("--gamma", adjoin_gamma, "adjoin the gamma_omega set as extra relators");
    ab->add_flag("--json", as_json);

    auto *snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("file", file)->required();
    snf->add_flag("--certify", certify, "print U and V with U*A*V = S");
    snf->add_flag("--json", as_json);

    auto *check = app.add_subcommand("check", "brute-force annihilation check for an element");
    check->add_option("file", file)->required();
    check->add_option("word", word_text, "element in the word mini-syntax")->required();
    check->add_option("--mode", check_mode)->check(CLI::IsMember({"gamma", "np"}));
    check->add_option("-p,--prime", prime_text, "the prime p (np mode)");
    check->add_option("--max-order", max_order_text, "catalog bound (default 27)");
    check->add_flag("--expect-member", expect_member, "exit 3 when a witness is found");
    check->add_flag("--json", as_json);

    auto *reduce = app.add_subcommand("reduce-word", "normal form of a word");
    reduce->add_option("file", file)->required();
    reduce->add_option("word", word_text)->required();
    reduce->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return EXIT_INPUT_ERROR;
    }

    try {
        if (center->parsed())
            return cmd_center(file, as_json);
        if (gamma->parsed())
            return cmd_gamma(file, mode, keep_trivial, as_json);
        if (np->parsed()) {
            gbs::Int p = gbs::parse_int(prime_text);
            if (!gbs::is_prime(p))
                throw std::domain_error("p = " + p.get_str() + " is not prime");
            return cmd_np(file, p, certify, staged, as_json);
        }
        if (ab->parsed()) {
            gbs::Int p = gbs::parse_int(prime_text);
            if (p != 0 && !gbs::is_prime(p))
                throw std::domain_error("p = " + p.get_str() + " is not prime");
            return cmd_abelianization(file, p, adjoin_gamma, as_json);
        }
        if (snf->parsed())
            return cmd_snf(file, certify, as_json);
        if (check->parsed()) {
            gbs::Int max_order = max_order_text.empty() ? env_max_order()
                                                        : gbs::parse_int(max_order_text);
            gbs::Int p = gbs::parse_int(prime_text);
            if (check_mode == "np" && !gbs::is_prime(p))
                throw std::domain_error("np mode needs a prime (-p)");
            return cmd_check(file, word_text, check_mode, p, max_order, expect_member, as_json);
        }
        if (reduce->parsed())
            return cmd_reduce_word(file, word_text, as_json);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    }
    return EXIT_INPUT_ERROR;
}
