// Drives the command-line binary end to end: exit codes, report schema,
// rendering and the transcription diff.  Takes the binary path as the
// only argument.

#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    std::cout << (ok ? "ok    " : "FAIL  ") << what << "\n";
    if (!ok) ++failures;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& cmd) {
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    auto r = run(cli +
                 " verify --check defining-relations,f-image-table,s-square-twist"
                 " --format json");
    expect(r.code == 0, "fast verify exits 0");
    nlohmann::json arr;
    bool parsed = true;
    try {
        arr = nlohmann::json::parse(r.out);
    } catch (...) {
        parsed = false;
    }
    expect(parsed, "json report parses");
    if (parsed) {
        expect(arr.is_array() && arr.size() == 3, "three report rows");
        for (const auto& row : arr) {
            expect(row.at("status") == "pass", "row " + row.at("name").get<std::string>() + " passes");
            expect(row.contains("truncation") && row.contains("elapsed_ms") &&
                       row.contains("paper_anchor"),
                   "row carries the schema fields");
        }
        expect(arr.at(0).at("name") == "defining-relations", "report keeps request order");
    }

    r = run(cli + " verify --check nonexistent");
    expect(r.code == 2, "unknown check name exits 2");

    r = run(cli + " verify --check ybe --spectral 1,-2,1");
    expect(r.code == 2, "zero spectral sum exits 2");

    r = run(cli + " verify --check ybe --spectral 2,1,1 --truncation 2");
    expect(r.code == 0, "ybe at alternative spectral weights exits 0");

    r = run(cli + " render Phi:1");
    expect(r.code == 0 && r.out.find("F12") != std::string::npos,
           "Phi:1 text render mentions the lowering letters");

    r = run(cli + " render Phi:1 --format latex");
    expect(r.code == 0 && r.out.find("F_{12}") != std::string::npos,
           "latex render uses subscripted glyphs");

    r = run(cli + " render \"eps:e':1:alpha2\"");
    expect(r.code == 0, "primed imaginary vector renders");

    r = run(cli + " render eps:f:d-a23+1d");
    expect(r.code == 0, "real minus-family vector renders");

    r = run(cli + " render D");
    expect(r.code == 0 && r.out.find("D[1][1]") != std::string::npos,
           "Cartan dressing renders");

    r = run(cli + " render R-matrix --truncation 1");
    expect(r.code == 0 && r.out.find("R[11][11]") != std::string::npos,
           "R-matrix table renders");

    r = run(cli + " render nonexistent");
    expect(r.code == 2, "unknown expression id exits 2");

    r = run(cli + " render O-matrix --format json");
    expect(r.code == 2, "json format on a matrix id exits 2");

    r = run(cli + " render Phi:1 --format json --output cli_phi1.json");
    expect(r.code == 0, "json element render to a file exits 0");
    {
        std::ifstream in("cli_phi1.json");
        expect(in.good(), "output file exists");
    }

    r = run(cli + " render Phi:1 --diff-against cli_phi1.json");
    expect(r.code == 0 && r.out.find("transcription matches") != std::string::npos,
           "round-trip diff matches");

    r = run(cli + " render Phi:2 --diff-against cli_phi1.json");
    expect(r.code == 1 && r.out.find("transcription differs") != std::string::npos,
           "diff against the wrong element exits 1");

    // string coefficients are accepted in transcriptions
    {
        std::ofstream outFile("cli_str_coeff.json");
        outFile << "{\"terms\":[{\"e12\":1,\"num\":[\"1\"],\"den\":[\"1\"]}]}";
    }
    r = run(cli + " render eps:e:a12 --diff-against cli_str_coeff.json");
    expect(r.code == 0 && r.out.find("transcription matches") != std::string::npos,
           "string coefficients parse in transcriptions");

    r = run(cli + " render O-matrix --diff-against cli_str_coeff.json");
    expect(r.code == 2, "diff against a non-element id exits 2");

    std::cout << (failures ? "FAILED" : "all cli checks passed") << "\n";
    return failures ? 1 : 0;
}
