#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string bin() {
    const char* b = std::getenv("SOLVQUOT_BIN");
    REQUIRE(b != nullptr);
    return b;
}

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "solvquot_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& args, std::string* output = nullptr,
        const std::string& env = "") {
    fs::path log = scratch() / "out.log";
    std::string cmd = env + bin() + " " + args + " > " + log.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    if (output) *output = read_file(log);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

const char* kWeitzenboeck =
    "field Q\nvars x y w\nunipotent z1\n"
    "map x = x + y*z1\nmap y = y\nmap w = w + x*z1 + (1/2)*y*z1^2\n";

} // namespace

TEST_CASE("compute: success and text output") {
    fs::path f = scratch() / "w.sq";
    write_file(f, kWeitzenboeck);
    std::string out;
    CHECK(run("compute " + f.string(), &out) == 0);
    CHECK(out.find("c = y") != std::string::npos);
    CHECK(out.find("[ok]") != std::string::npos);
}

TEST_CASE("compute: exit 2 on syntax errors") {
    fs::path f = scratch() / "bad.sq";
    write_file(f, "field Q\nvars x\nmap x = x + * y\n");
    std::string out;
    CHECK(run("compute " + f.string(), &out) == 2);
    CHECK(out.find("parse error at 3:") != std::string::npos);
}

TEST_CASE("compute: exit 3 on validation errors") {
    fs::path f = scratch() / "inv.sq";
    write_file(f, "field Q\nvars x\nunipotent z1\nmap x = x + 1\n");
    CHECK(run("compute " + f.string()) == 3);

    fs::path g = scratch() / "mod.sq";
    write_file(g, "field Fp 9\nvars x\nmap x = x\n");
    CHECK(run("compute " + g.string()) == 3);

    // Passes the identity axiom but is not a genuine coaction; the pipeline
    // detects the broken weight decomposition.
    fs::path h = scratch() / "fake.sq";
    write_file(h, "field Q\nvars x w\ntorus t1\nmap x = t1*x + t1^2*w - w\nmap w = t1*w\n");
    std::string out;
    CHECK(run("compute " + h.string(), &out) == 3);
    CHECK(out.find("semi-invariant") != std::string::npos);
}

TEST_CASE("compute: exit 4 when a required slice does not exist") {
    // z1 occurs in Phi, but the restricted phi_1 is the identity.
    fs::path f = scratch() / "deg.sq";
    write_file(f, "field Q\nvars x y\nunipotent z1\ntorus t1\n"
                  "map x = x + y*z1*t1 - y*z1\nmap y = y\n");
    std::string out;
    CHECK(run("compute " + f.string(), &out) == 4);
    CHECK(out.find("degenerate") != std::string::npos);
}

TEST_CASE("compute: exit 5 when the iteration cap trips") {
    fs::path f = scratch() / "p2.sq";
    write_file(f, "field Fp 2\nvars x y\nunipotent z1\nmap x = x + y*z1 + z1^2\nmap y = y\n");
    CHECK(run("compute " + f.string()) == 0);
    CHECK(run("compute " + f.string(), nullptr, "SOLVQUOT_MAX_ITER=0 ") == 5);
    CHECK(run("compute " + f.string() + " --max-iter 0") == 5);
}

TEST_CASE("compute: deterministic JSON across runs") {
    fs::path f = scratch() / "w2.sq";
    write_file(f, kWeitzenboeck);
    fs::path j1 = scratch() / "r1.json";
    fs::path j2 = scratch() / "r2.json";
    CHECK(run("compute " + f.string() + " --json " + j1.string()) == 0);
    CHECK(run("compute " + f.string() + " --json " + j2.string()) == 0);
    std::string a = read_file(j1), b = read_file(j2);
    CHECK(!a.empty());
    CHECK(a == b);
}

TEST_CASE("compute: spotcheck flag") {
    fs::path f = scratch() / "w3.sq";
    write_file(f, kWeitzenboeck);
    std::string out;
    CHECK(run("compute " + f.string() + " --spotcheck 20 --seed 9", &out) == 0);
    CHECK(out.find("numeric spot-check") != std::string::npos);
}

TEST_CASE("verify: stored results") {
    fs::path f = scratch() / "w4.sq";
    write_file(f, kWeitzenboeck);
    fs::path j = scratch() / "w4.json";
    REQUIRE(run("compute " + f.string() + " --json " + j.string()) == 0);
    CHECK(run("verify " + f.string() + " " + j.string()) == 0);

    // Hand-edited value: exit 6.
    std::string tampered = read_file(j);
    auto pos = tampered.find("\"b\": \"y\"");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 8, "\"b\": \"w\"");
    fs::path jt = scratch() / "w4_tampered.json";
    write_file(jt, tampered);
    CHECK(run("verify " + f.string() + " " + jt.string()) == 6);

    // Schema mismatch: exit 2.
    fs::path js = scratch() / "w4_schema.json";
    write_file(js, "{\"schema\": \"other/9\"}\n");
    CHECK(run("verify " + f.string() + " " + js.string()) == 2);
    fs::path jn = scratch() / "w4_notjson.json";
    write_file(jn, "not json");
    CHECK(run("verify " + f.string() + " " + jn.string()) == 2);
}

TEST_CASE("examples: gallery round trip") {
    fs::path dir = scratch() / "gallery";
    std::string out;
    CHECK(run("examples " + dir.string(), &out) == 0);
    int count = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        ++count;
        CHECK(run("compute " + e.path().string()) == 0);
    }
    CHECK(count == 6);
    CHECK(run("examples " + dir.string(), &out) != 0); // refuse to overwrite
    CHECK(out.find("--force") != std::string::npos);
    CHECK(run("examples " + dir.string() + " --force") == 0);
}
