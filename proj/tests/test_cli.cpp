#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <vector>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;  // stdout and stderr, merged
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kSsp = std::string(GRAMMARS_DIR) + "/ssp.llg";
const std::string kAnbn = std::string(GRAMMARS_DIR) + "/anbn.mcfg";
const std::string kCopy = std::string(GRAMMARS_DIR) + "/copy.mcfg";
const std::string kAcg = std::string(GRAMMARS_DIR) + "/anbn.acg";

}  // namespace

TEST_CASE("check accepts every shipped grammar and reports the file") {
    for (const std::string& path : {kSsp, kAnbn, kCopy, kAcg}) {
        RunResult r = run("check " + path);
        CHECK(r.code == 0);
        CHECK(r.out == path + ": ok\n");
    }
}

TEST_CASE("check rejects a malformed file with a file:line diagnostic") {
    const std::string path = "/tmp/cli_broken.llg";
    FILE* f = fopen(path.c_str(), "wb");
    REQUIRE(f != nullptr);
    fputs("alphabet a b\natom S left=1 rigth=1\nstart S\n", f);
    fclose(f);
    RunResult r = run("check " + path);
    CHECK(r.code == 2);
    CHECK(r.out.find(path + ":2") != std::string::npos);

    RunResult missing = run("check /tmp/no_such_file.llg");
    CHECK(missing.code == 2);
    CHECK(missing.out.find("cannot open") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("generate " + kSsp).code == 2);  // --max-axioms missing
    CHECK(run("--help").code == 0);
}

TEST_CASE("mcfg2llg then generate reproduces the bounded oracle language") {
    RunResult conv = run("mcfg2llg " + kAnbn + " -o /tmp/cli_anbn.llg");
    REQUIRE(conv.code == 0);
    RunResult gen = run("generate /tmp/cli_anbn.llg --max-axioms 7");
    CHECK(gen.code == 0);
    CHECK(gen.out == "\nab\naabb\naaabbb\naaaabbbb\naaaaabbbbb\n");

    RunResult capped = run("generate /tmp/cli_anbn.llg --max-axioms 7 --max-len 4");
    CHECK(capped.code == 0);
    CHECK(capped.out == "\nab\naabb\n");
}

TEST_CASE("member answers through the exit code and can dump a witness") {
    RunResult yes = run("member " + kSsp + " --word '+•-•' --max-axioms 8");
    CHECK(yes.code == 0);
    CHECK(yes.out.empty());

    RunResult witness = run("member " + kSsp + " --word '+•-•' --max-axioms 8 --witness");
    CHECK(witness.code == 0);
    CHECK(witness.out == "axioms: cons open open push close close\n");

    RunResult ascii = run("member " + kSsp + " --word '+.-.' --ascii --max-axioms 8");
    CHECK(ascii.code == 0);

    RunResult no = run("member " + kSsp + " --word '+•' --max-axioms 9");
    CHECK(no.code == 1);
    CHECK(no.out.empty());
}

TEST_CASE("llg2mcfg rejects the tensor-typed lexicon naming the entry") {
    RunResult r = run("llg2mcfg " + kSsp);
    CHECK(r.code == 2);
    CHECK(r.out.find("push") != std::string::npos);
    CHECK(r.out.find("tensor") != std::string::npos);
}

TEST_CASE("acg2llg emits a grammar that check accepts") {
    RunResult conv = run("acg2llg " + kAcg + " -o /tmp/cli_anbn_acg.llg");
    REQUIRE(conv.code == 0);
    RunResult chk = run("check /tmp/cli_anbn_acg.llg");
    CHECK(chk.code == 0);
}

TEST_CASE("render prints the documented DOT picture") {
    RunResult r = run("render " + kSsp + " --axiom push");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "digraph cowordism {\n"
          "  t0 [shape=circle label=\"t0:R\"];\n"
          "  t1 [shape=circle label=\"t1:L\"];\n"
          "  t2 [shape=circle label=\"t2:R\"];\n"
          "  t3 [shape=circle label=\"t3:L\"];\n"
          "  t4 [shape=circle label=\"t4:L\"];\n"
          "  t5 [shape=circle label=\"t5:R\"];\n"
          "  t6 [shape=circle label=\"t6:L\"];\n"
          "  t7 [shape=circle label=\"t7:R\"];\n"
          "  t0 -> t4 [label=\"\\\"\\\"\"];\n"
          "  t2 -> t6 [label=\"\\\"\\\"\"];\n"
          "  t5 -> t1 [label=\"\\\"+\\\"\"];\n"
          "  t7 -> t3 [label=\"\\\"-\\\"\"];\n"
          "}\n");

    RunResult bad = run("render " + kSsp + " --axiom nosuch");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("nosuch") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    REQUIRE(run("mcfg2llg " + kAnbn + " -o /tmp/cli_anbn.llg").code == 0);
    const std::vector<std::string> runs = {
        "generate /tmp/cli_anbn.llg --max-axioms 7", "mcfg2llg " + kAnbn,
        "llg2mcfg /tmp/cli_anbn.llg", "render " + kSsp + " --axiom cons",
        "acg2llg " + kAcg};
    for (const std::string& args : runs) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.code == 0);
    }
}
