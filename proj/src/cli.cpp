#include "cowordism/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "cowordism/acg.hpp"
#include "cowordism/lexer.hpp"
#include "cowordism/llg.hpp"
#include "cowordism/mcfg.hpp"

namespace cow {

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError(out_path + ": cannot write file");
    out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// The "•" letter spelled in ASCII: every '.' byte becomes a bullet.
std::string expand_ascii(const std::string& text) {
    std::string out;
    for (char c : text)
        if (c == '.')
            out += "•";
        else
            out += c;
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"grammars of word cobordisms: check, convert, generate, recognize, render"};
    app.require_subcommand(1);

    std::string in_path, out_path, axiom_name, word_text;
    int max_axioms = 0, max_len = -1;
    bool ascii = false, want_witness = false;

    CLI::App* check = app.add_subcommand("check", "parse and validate a grammar file");
    check->add_option("file", in_path, "grammar file (.llg, .mcfg or .acg)")->required();

    CLI::App* mcfg2llg =
        app.add_subcommand("mcfg2llg", "encode a multiple context-free grammar");
    mcfg2llg->add_option("file", in_path, "input .mcfg file")->required();
    mcfg2llg->add_option("-o,--output", out_path, "output .llg file (default: stdout)");

    CLI::App* llg2mcfg = app.add_subcommand(
        "llg2mcfg", "decode a grammar with tensor-free types back to an MCFG");
    llg2mcfg->add_option("file", in_path, "input .llg file")->required();
    llg2mcfg->add_option("-o,--output", out_path, "output .mcfg file (default: stdout)");

    CLI::App* acg2llg =
        app.add_subcommand("acg2llg", "encode an abstract categorial grammar");
    acg2llg->add_option("file", in_path, "input .acg file")->required();
    acg2llg->add_option("-o,--output", out_path, "output .llg file (default: stdout)");

    CLI::App* gen = app.add_subcommand(
        "generate", "print every word derivable within an axiom budget, sorted");
    gen->add_option("file", in_path, "input .llg file")->required();
    gen->add_option("--max-axioms", max_axioms, "axiom budget per derivation")->required();
    gen->add_option("--max-len", max_len, "also cap the word length");

    CLI::App* mem = app.add_subcommand(
        "member", "test one word for membership (exit 0: member, 1: not a member)");
    mem->add_option("file", in_path, "input .llg file")->required();
    mem->add_option("--word", word_text, "the word to test")->required();
    mem->add_option("--max-axioms", max_axioms, "axiom budget per derivation")->required();
    mem->add_flag("--ascii", ascii, "read '.' in --word as the bullet letter •");
    mem->add_flag("--witness", want_witness, "print the axioms of a found derivation");

    CLI::App* render = app.add_subcommand("render", "write one axiom value as a DOT graph");
    render->add_option("file", in_path, "input .llg file")->required();
    render->add_option("--axiom", axiom_name, "name of the lexicon axiom")->required();
    render->add_option("-o,--output", out_path, "output .dot file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*check) {
            if (ends_with(in_path, ".llg"))
                load_llg(in_path);
            else if (ends_with(in_path, ".mcfg"))
                load_mcfg(in_path).validate();
            else if (ends_with(in_path, ".acg"))
                load_acg(in_path).validate();
            else
                throw ParseError(in_path + ": unknown extension (expected .llg, .mcfg or .acg)");
            std::cout << in_path << ": ok\n";
        } else if (*mcfg2llg) {
            emit(out_path, write_llg(mcfg_to_llg(load_mcfg(in_path))));
        } else if (*llg2mcfg) {
            emit(out_path, write_mcfg(llg_to_mcfg(load_llg(in_path))));
        } else if (*acg2llg) {
            emit(out_path, write_llg(acg_to_llg(load_acg(in_path))));
        } else if (*gen) {
            Llg g = load_llg(in_path);
            std::string out;
            for (const Word& w : language(g, max_axioms, max_len))
                out += g.alphabet.format_word(w) + "\n";
            std::cout << out;
        } else if (*mem) {
            Llg g = load_llg(in_path);
            const Word w = g.alphabet.parse_word(ascii ? expand_ascii(word_text) : word_text);
            std::optional<Derivation> d = member(g, w, max_axioms);
            if (!d) return 1;
            if (want_witness) {
                std::string line = "axioms:";
                for (const std::string& n : d->entries) line += " " + n;
                std::cout << line << "\n";
            }
        } else if (*render) {
            Llg g = load_llg(in_path);
            const LexEntry* found = nullptr;
            for (const LexEntry& e : g.lexicon)
                if (e.name == axiom_name) found = &e;
            if (!found)
                throw ParseError(in_path + ": no axiom named '" + axiom_name + "'");
            emit(out_path, to_dot(found->value, g.alphabet));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace cow
