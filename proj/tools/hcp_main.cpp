// hcp — build, verify and report the perfect 2-colorings of the halved
// 24-cube that come out of the Golay-code construction.
//
// Exit codes: 0 success, 1 verification mismatch, 2 I/O or argument error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcp/hcp.hpp"
#include "sha256.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct RunContext {
    std::string command;
    std::vector<std::string> arguments;
    std::string manifest_path;
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void note_output(const std::string& path) { outputs.push_back(path); }

    void write_manifest() const {
        if (manifest_path.empty()) return;
        ordered_json m;
        m["command"] = command;
        m["arguments"] = arguments;
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        m["wall_time_seconds"] = secs;
        m["threads"] = hcp::thread_count();
        ordered_json digests = ordered_json::object();
        for (const std::string& path : outputs) {
            std::ifstream is(path, std::ios::binary);
            if (!is) throw hcp::IoError("manifest: cannot re-read " + path);
            std::ostringstream buf;
            buf << is.rdbuf();
            digests[path] = "sha256:" + hcp::tools::sha256_hex(buf.str());
        }
        m["outputs"] = digests;
        std::ofstream os(manifest_path);
        if (!os) throw hcp::IoError("cannot open manifest " + manifest_path);
        os << m.dump(2) << "\n";
    }
};

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string num;
    for (char ch : text) {
        if (ch == ',') {
            if (!num.empty()) out.push_back(std::stoi(num));
            num.clear();
        } else if (ch == ' ') {
            continue;
        } else {
            num.push_back(ch);
        }
    }
    if (!num.empty()) out.push_back(std::stoi(num));
    return out;
}

void print_report(const hcp::VerificationReport& rep) {
    if (rep.perfect) {
        std::cout << "perfect, parameter matrix " << rep.matrix->to_string() << "\n";
    } else {
        std::cout << "violated: " << rep.witness->to_string() << "\n";
    }
}

ordered_json spectrum_entry_json(const hcp::SpectrumEntry& e) {
    ordered_json j;
    j["c"] = e.c;
    j["status"] = hcp::existence_name(e.status);
    j["circle"] = e.circle;
    j["box"] = e.box;
    ordered_json w = ordered_json::array();
    for (auto [i, jj] : e.witnesses) w.push_back(ordered_json::array({i, jj}));
    j["witnesses"] = w;
    if (e.note) j["note"] = *e.note;
    return j;
}

void print_spectrum_text(const std::vector<hcp::SpectrumEntry>& table) {
    // 16 values per row: the c line, then the status/marks line.
    std::cout << "# status: + exists, - nonexistent, ? open\n"
              << "# o: union of cosets of the Golay-code neighborhood; #: union of cosets of L\n";
    for (size_t row = 0; row < table.size(); row += 16) {
        std::ostringstream cs, marks;
        for (size_t idx = row; idx < std::min(row + 16, table.size()); ++idx) {
            const auto& e = table[idx];
            cs << e.c << '\t';
            std::string cell;
            switch (e.status) {
                case hcp::Existence::Exists: cell = "+"; break;
                case hcp::Existence::Nonexistent: cell = "-"; break;
                case hcp::Existence::Open: cell = "?"; break;
            }
            if (e.circle) cell += 'o';
            if (e.box) cell += '#';
            marks << cell << '\t';
        }
        std::cout << cs.str() << "\n" << marks.str() << "\n";
    }
    for (const auto& e : table) {
        if (e.note) std::cout << "# c=" << e.c << ": " << *e.note << "\n";
    }
}

int cmd_build_code(RunContext& ctx, const std::string& name, const std::string& out_path) {
    const hcp::BinaryCode code = hcp::build_named_code(name);
    std::ofstream os(out_path);
    if (!os) throw hcp::IoError("cannot open " + out_path + " for writing");
    hcp::write_code(code, os);
    os.close();
    ctx.note_output(out_path);
    std::cout << "wrote " << name << " to " << out_path << " (n=" << code.length()
              << ", size=2^" << code.rank() << ")\n";
    return kExitOk;
}

int cmd_verify_code(const std::string& in_path, int64_t expect_size, int expect_mindist) {
    std::ifstream is(in_path);
    if (!is) throw hcp::IoError("cannot open " + in_path);
    const hcp::BinaryCode code = hcp::read_code(is);
    const uint64_t size = code.size();
    std::cout << "code: n=" << code.length() << " size=" << size;
    int ok = kExitOk;
    if (expect_size >= 0 && static_cast<uint64_t>(expect_size) != size) ok = kExitVerification;
    if (expect_mindist >= 0 || expect_size >= 0) {
        // min distance needs at least two words
        if (code.rank() == 0) {
            std::cout << " (singleton)";
            if (expect_mindist >= 0) ok = kExitVerification;
        } else {
            const int d = hcp::min_distance(code);
            std::cout << " mindist=" << d;
            if (expect_mindist >= 0 && d != expect_mindist) ok = kExitVerification;
        }
    }
    std::cout << (ok == kExitOk ? " OK" : " MISMATCH") << "\n";
    return ok;
}

int cmd_build_coloring(RunContext& ctx, const std::string& i_text, const std::string& j_text,
                       const std::string& out_path) {
    hcp::ConstructionSpec spec;
    spec.i_set = parse_index_list(i_text);
    spec.j_set = parse_index_list(j_text);
    spec.validate();
    const hcp::PaperCodes codes = hcp::PaperCodes::build();
    const hcp::ConstructionEngine engine(codes);
    const hcp::Coloring col = engine.build_union(spec);
    hcp::save_coloring(col, out_path);
    ctx.note_output(out_path);
    std::cout << "wrote union coloring " << spec.to_string() << " (c=" << spec.c_value()
              << ") to " << out_path << "\n";
    return kExitOk;
}

int cmd_verify_coloring(const std::string& in_path, const std::string& expect_text) {
    const hcp::Coloring col = hcp::load_coloring(in_path);
    std::cout << "coloring: n=" << col.n << " graph=" << hcp::graph_kind_name(col.graph)
              << " k=" << col.k << "\n";
    const hcp::VerificationReport rep = hcp::verify_perfect(col);
    print_report(rep);
    if (!rep.perfect) return kExitVerification;
    if (!expect_text.empty()) {
        const hcp::ParameterMatrix expect = hcp::ParameterMatrix::parse(expect_text);
        if (!(expect == *rep.matrix)) {
            std::cout << "expected " << expect.to_string() << ", got " << rep.matrix->to_string()
                      << "\n";
            return kExitVerification;
        }
    }
    return kExitOk;
}

int cmd_spectrum(const std::string& format) {
    const auto table = hcp::spectrum_table();
    if (format == "json") {
        ordered_json out;
        ordered_json entries = ordered_json::array();
        int exists = 0, nonexistent = 0, open = 0;
        for (const auto& e : table) {
            entries.push_back(spectrum_entry_json(e));
            switch (e.status) {
                case hcp::Existence::Exists: ++exists; break;
                case hcp::Existence::Nonexistent: ++nonexistent; break;
                case hcp::Existence::Open: ++open; break;
            }
        }
        out["entries"] = entries;
        out["counts"] = {{"exists", exists}, {"nonexistent", nonexistent}, {"open", open}};
        std::cout << out.dump(2) << "\n";
    } else {
        print_spectrum_text(table);
    }
    return kExitOk;
}

int cmd_analyze_spheres(RunContext& ctx, const std::string& in_path,
                        const std::string& report_path) {
    const hcp::Coloring col = hcp::load_coloring(in_path);
    if (col.graph == hcp::GraphKind::H1)
        throw hcp::ArgumentError("sphere analysis expects a halved-cube coloring");
    const hcp::VertexBitset support = col.color_set(0);
    const hcp::SphereDecomposition dec = hcp::decompose_spheres(support, col.graph, col.n);
    ordered_json out;
    out["centers"] = dec.centers.count();
    out["leftover_count"] = dec.leftover.count();
    out["disjoint"] = dec.pairwise_disjoint;
    std::ofstream os(report_path);
    if (!os) throw hcp::IoError("cannot open " + report_path + " for writing");
    os << out.dump(2) << "\n";
    os.close();
    ctx.note_output(report_path);
    std::cout << "centers=" << dec.centers.count() << " leftover=" << dec.leftover.count()
              << " disjoint=" << (dec.pairwise_disjoint ? "true" : "false") << "\n";
    return kExitOk;
}

int cmd_filter(int c) {
    const auto verdict = hcp::nonexistence_filter(c);
    if (verdict == hcp::FilterVerdict::Nonexistent) {
        std::cout << "c=" << c << ": nonexistent (c <= 7 forces a union of spheres, which needs "
                     "c divisible by 3 or c >= 25)\n";
    } else {
        std::cout << "c=" << c << ": inconclusive by the sphere filter\n";
    }
    if (const auto note = hcp::uniqueness_note(c)) std::cout << "note: " << *note << "\n";
    return kExitOk;
}

int cmd_transform_matrix(const std::string& matrix_text, int n, const std::string& expect_text) {
    const hcp::ParameterMatrix s = hcp::ParameterMatrix::parse(matrix_text);
    const hcp::ParameterMatrix t = hcp::transform_h1_to_h2(s, n);
    std::cout << t.to_compact_string() << "\n";
    if (!expect_text.empty()) {
        const hcp::ParameterMatrix expect = hcp::ParameterMatrix::parse(expect_text);
        if (!(expect == t)) {
            std::cout << "expected " << expect.to_string() << ", got " << t.to_string() << "\n";
            return kExitVerification;
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// reproduce-paper: the end-to-end pipeline over every claim the toolkit can
// check, one line per check.

class CheckList {
  public:
    void check(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n" << std::flush;
        if (!ok) {
            ++failures_;
            if (first_failure_.empty()) first_failure_ = name;
        }
    }

    int failures() const { return failures_; }
    const std::string& first_failure() const { return first_failure_; }

  private:
    int failures_ = 0;
    std::string first_failure_;
};

// The admissible-parameter table for H(24) colorings with eigenvalue +-8
// and their induced HH(24) matrices.
struct TableColumn {
    std::optional<hcp::ParameterMatrix> minus8, plus8;
    hcp::ParameterMatrix hh;
};

std::vector<TableColumn> h24_parameter_table() {
    using M = hcp::ParameterMatrix;
    auto col = [](std::optional<M> m8, std::optional<M> p8, M hh) {
        return TableColumn{std::move(m8), std::move(p8), std::move(hh)};
    };
    return {
        col(std::nullopt, M{{9, 15}, {1, 23}}, M{{36, 240}, {16, 260}}),
        col(std::nullopt, M{{10, 14}, {2, 22}}, M{{52, 224}, {32, 244}}),
        col(std::nullopt, M{{11, 13}, {3, 21}}, M{{68, 208}, {48, 228}}),
        col(M{{0, 24}, {8, 16}}, M{{12, 12}, {4, 20}}, M{{84, 192}, {64, 212}}),
        col(M{{1, 23}, {9, 15}}, std::nullopt, M{{92, 184}, {72, 204}}),
        col(M{{2, 22}, {10, 14}}, M{{13, 11}, {5, 19}}, M{{100, 176}, {80, 196}}),
        col(M{{3, 21}, {11, 13}}, std::nullopt, M{{108, 168}, {88, 188}}),
        col(M{{4, 20}, {12, 12}}, M{{14, 10}, {6, 18}}, M{{116, 160}, {96, 180}}),
        col(M{{5, 19}, {13, 11}}, std::nullopt, M{{124, 152}, {104, 172}}),
        col(M{{6, 18}, {14, 10}}, M{{15, 9}, {7, 17}}, M{{132, 144}, {112, 164}}),
        col(M{{7, 17}, {15, 9}}, std::nullopt, M{{140, 136}, {120, 156}}),
        col(M{{8, 16}, {16, 8}}, M{{16, 8}, {8, 16}}, M{{148, 128}, {128, 148}}),
    };
}

const hcp::ParameterMatrix kGolayH1Matrix{{0, 24, 0, 0, 0},
                                          {1, 0, 23, 0, 0},
                                          {0, 2, 0, 22, 0},
                                          {0, 0, 3, 0, 21},
                                          {0, 0, 0, 24, 0}};

const hcp::ParameterMatrix kGolayH2Matrix{{0, 0, 276, 0, 0},
                                          {0, 23, 0, 253, 0},
                                          {1, 0, 44, 0, 231},
                                          {0, 3, 0, 273, 0},
                                          {0, 0, 36, 0, 240}};

bool edge_double_count_holds(const hcp::ParameterMatrix& m, uint64_t support,
                             uint64_t vertices) {
    return static_cast<uint64_t>(m.at(0, 1)) * support ==
           static_cast<uint64_t>(m.at(1, 0)) * (vertices - support);
}

int cmd_reproduce_paper(bool quick) {
    CheckList checks;
    const auto t0 = std::chrono::steady_clock::now();

    // Codes.
    const hcp::PaperCodes codes = hcp::PaperCodes::build();
    checks.check("C8 is (8,16,4)", codes.c8.size() == 16 && hcp::min_distance(codes.c8) == 4);
    checks.check("C8' is (8,16,4)", codes.c8p.size() == 16 && hcp::min_distance(codes.c8p) == 4);
    {
        std::vector<hcp::Word> inter;
        for (const hcp::Word& w : codes.c8.words()) {
            if (codes.c8p.contains(w)) inter.push_back(w);
        }
        checks.check("C8 and C8' meet exactly in {0^8, 1^8}",
                     inter.size() == 2 && inter.front() == hcp::Word::zero(8) &&
                         inter.back() == hcp::Word::all_ones(8));
    }
    checks.check("B8 is (8,128,2)", codes.b8.size() == 128 && hcp::min_distance(codes.b8) == 2);
    checks.check("F is the (24,2^12,8) extended Golay code",
                 codes.f.size() == 4096 && hcp::min_distance(codes.f) == 8);
    checks.check("D is (24,2^18,4)",
                 codes.d.size() == (uint64_t{1} << 18) && hcp::min_distance(codes.d) == 4);
    checks.check("F is a subcode of D", codes.f.subset_of(codes.d));
    checks.check("C16 is (16,2^11,4)",
                 codes.c16.size() == (uint64_t{1} << 11) && hcp::min_distance(codes.c16) == 4);
    checks.check("L has 2^18 words, all of even weight; min distance 2",
                 codes.l.size() == (uint64_t{1} << 18) && hcp::min_distance(codes.l) == 2);
    checks.check("N is a 2^21-word translate with offset weight 3",
                 codes.n.size() == (uint64_t{1} << 21) && codes.n.offset().weight() == 3);
    checks.check("distance from D to N is 3", hcp::set_distance(codes.d, codes.n) == 3);

    // The Golay distance coloring and its components.
    const hcp::Coloring golay = hcp::distance_coloring(codes.f);
    checks.check("covering radius of F is 4", golay.k == 5);
    if (quick) {
        std::cout << "[skip] H(24) full sweep (--quick)\n";
        std::vector<int> even_labels, odd_labels;
        const hcp::Coloring even =
            hcp::restrict_to_component(golay, hcp::GraphKind::H2Even, &even_labels);
        const hcp::Coloring odd =
            hcp::restrict_to_component(golay, hcp::GraphKind::H2Odd, &odd_labels);
        const auto even_rep = hcp::verify_perfect(even);
        const auto odd_rep = hcp::verify_perfect(odd);
        checks.check("even component of the Golay coloring uses colors {0,2,4}",
                     even_labels == std::vector<int>({0, 2, 4}));
        checks.check("odd component of the Golay coloring uses colors {1,3}",
                     odd_labels == std::vector<int>({1, 3}));
        checks.check("odd component is a perfect 2-coloring ((23,253)(3,273))",
                     odd_rep.perfect &&
                         *odd_rep.matrix == hcp::ParameterMatrix{{23, 253}, {3, 273}});
        checks.check("even component is perfect", even_rep.perfect);
    } else {
        const hcp::ComponentVerification comp = hcp::verify_perfect_h2_from_h1(golay);
        checks.check("Golay distance coloring is perfect on H(24) with the 5x5 matrix",
                     comp.h1_matrix == kGolayH1Matrix, comp.h1_matrix.to_compact_string());
        const hcp::ParameterMatrix hh = hcp::transform_h1_to_h2(comp.h1_matrix, 24);
        checks.check("its (S^2-24E)/2 transform equals the expected HH(24) matrix",
                     hh == kGolayH2Matrix);
        const bool labels_ok = comp.even_labels == std::vector<int>({0, 2, 4}) &&
                               comp.odd_labels == std::vector<int>({1, 3});
        checks.check("even component uses colors {0,2,4}, odd uses {1,3}", labels_ok);
        bool even_ok = labels_ok && comp.even.perfect;
        if (even_ok) {
            for (int i = 0; i < 3 && even_ok; ++i)
                for (int j = 0; j < 3 && even_ok; ++j)
                    even_ok = comp.even.matrix->at(i, j) ==
                              hh.at(comp.even_labels[static_cast<size_t>(i)],
                                    comp.even_labels[static_cast<size_t>(j)]);
        }
        checks.check("even component matrix matches the transform rows {0,2,4}", even_ok);
        checks.check("odd component is a perfect 2-coloring ((23,253)(3,273))",
                     comp.odd.perfect &&
                         *comp.odd.matrix == hcp::ParameterMatrix{{23, 253}, {3, 273}});
    }

    // chi_L on the even component.
    {
        hcp::VertexBitset support(23);
        codes.l.for_each_word([&](uint32_t w) { support.set(w >> 1); });
        const auto rep =
            hcp::verify_support(hcp::SweepGraph::make(hcp::GraphKind::H2Even, 24), support);
        const bool ok =
            rep.perfect && *rep.matrix == hcp::ParameterMatrix{{28, 248}, {8, 268}};
        checks.check("chi_L is a perfect 2-coloring ((28,248)(8,268)) of the even component", ok);
        if (rep.perfect)
            checks.check("edge double-count for chi_L",
                         edge_double_count_holds(*rep.matrix, support.count(), uint64_t{1} << 23));
    }

    // Three sampled union colorings.
    {
        const hcp::ConstructionEngine engine(codes);
        const auto specs = hcp::sample_mixed_specs(3);
        const hcp::SweepGraph g = hcp::SweepGraph::make(hcp::GraphKind::H2Odd, 24);
        for (const auto& spec : specs) {
            const hcp::VertexBitset support = engine.union_support(spec);
            const auto rep = hcp::verify_support(g, support);
            const int c = spec.c_value();
            const hcp::ParameterMatrix want{{20 + c, 256 - c}, {c, 276 - c}};
            const bool ok = rep.perfect && *rep.matrix == want &&
                            edge_double_count_holds(*rep.matrix, support.count(), g.vertex_count());
            checks.check("union " + spec.to_string() + " has parameters " + want.to_string(), ok);
        }
    }

    // The admissible-parameter table for eigenvalue 20.
    {
        bool all = true;
        for (const TableColumn& col : h24_parameter_table()) {
            if (col.minus8) all = all && hcp::transform_h1_to_h2(*col.minus8, 24) == col.hh;
            if (col.plus8) all = all && hcp::transform_h1_to_h2(*col.plus8, 24) == col.hh;
            all = all && hcp::eigenvalue_of(col.hh) == 20;
        }
        checks.check("all 17 admissible H(24) matrices transform onto the 12 HH(24) columns", all);
    }

    // Spectrum.
    {
        const auto table = hcp::spectrum_table();
        int exists = 0, nonexistent = 0, open = 0;
        for (const auto& e : table) {
            if (e.status == hcp::Existence::Exists) ++exists;
            if (e.status == hcp::Existence::Nonexistent) ++nonexistent;
            if (e.status == hcp::Existence::Open) ++open;
        }
        checks.check("spectrum covers 121 parameter sets (5 nonexistent, 2 open)",
                     exists == 121 && nonexistent == 5 && open == 2);
        std::cout << "\n";
        print_spectrum_text(table);
        std::cout << "\n";
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (checks.failures() == 0) {
        std::cout << "all checks passed in " << secs << "s\n";
        return kExitOk;
    }
    std::cerr << checks.failures() << " check(s) failed; first failure: "
              << checks.first_failure() << "\n";
    return kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect 2-colorings of the halved 24-cube"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: HCP_THREADS or all cores)");
    std::string manifest;
    app.add_option("--manifest", manifest, "write a run manifest (JSON) to this path");

    auto* build_code = app.add_subcommand("build-code", "construct a named code and write it");
    std::string code_name, code_out;
    build_code->add_option("--name", code_name, "one of " + hcp::code_name_list())->required();
    build_code->add_option("--out", code_out, "output path")->required();

    auto* verify_code = app.add_subcommand("verify-code", "check a code file's parameters");
    std::string vc_in;
    int64_t vc_size = -1;
    int vc_mindist = -1;
    verify_code->add_option("--in", vc_in)->required();
    verify_code->add_option("--expect-size", vc_size, "expected number of words");
    verify_code->add_option("--expect-mindist", vc_mindist, "expected minimum distance");

    auto* build_col = app.add_subcommand("build-coloring", "build a union 2-coloring on H2-odd");
    std::string bc_i, bc_j, bc_out;
    build_col->add_option("--i", bc_i, "Golay-neighborhood coset indices, e.g. \"1,2,5\"");
    build_col->add_option("--j", bc_j, "L-coset indices, e.g. \"1\"");
    build_col->add_option("--out", bc_out)->required();

    auto* verify_col = app.add_subcommand("verify-coloring", "verify a coloring file is perfect");
    std::string vcol_in, vcol_expect;
    verify_col->add_option("--in", vcol_in)->required();
    verify_col->add_option("--expect", vcol_expect, "expected matrix, e.g. \"23,253;3,273\"");

    auto* spectrum = app.add_subcommand("spectrum", "print the c = 1..128 spectrum table");
    std::string spec_format = "text";
    spectrum->add_option("--format", spec_format)->check(CLI::IsMember({"text", "json"}));

    auto* spheres = app.add_subcommand("analyze-spheres", "decompose a coloring's support into spheres");
    std::string sp_in, sp_report;
    spheres->add_option("--in", sp_in)->required();
    spheres->add_option("--report", sp_report)->required();

    auto* filter = app.add_subcommand("filter", "nonexistence verdict for a value of c");
    int filter_c = 0;
    filter->add_option("--c", filter_c)->required();

    auto* transform = app.add_subcommand("transform-matrix", "apply the H(n) -> HH(n) transform");
    std::string tm_matrix, tm_expect;
    int tm_n = 24;
    transform->add_option("--matrix", tm_matrix, "H1 matrix, e.g. \"0,24;8,16\"")->required();
    transform->add_option("--n", tm_n, "word length (default 24)");
    transform->add_option("--expect", tm_expect, "expected result matrix");

    auto* reproduce = app.add_subcommand("reproduce-paper", "run every claim end to end");
    bool quick = false;
    reproduce->add_flag("--quick", quick, "skip the full H(24) sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (threads > 0) hcp::set_thread_count(threads);

    RunContext ctx;
    ctx.manifest_path = manifest;
    for (int i = 1; i < argc; ++i) ctx.arguments.emplace_back(argv[i]);

    try {
        int rc = kExitUsage;
        if (build_code->parsed()) {
            ctx.command = "build-code";
            rc = cmd_build_code(ctx, code_name, code_out);
        } else if (verify_code->parsed()) {
            ctx.command = "verify-code";
            rc = cmd_verify_code(vc_in, vc_size, vc_mindist);
        } else if (build_col->parsed()) {
            ctx.command = "build-coloring";
            rc = cmd_build_coloring(ctx, bc_i, bc_j, bc_out);
        } else if (verify_col->parsed()) {
            ctx.command = "verify-coloring";
            rc = cmd_verify_coloring(vcol_in, vcol_expect);
        } else if (spectrum->parsed()) {
            ctx.command = "spectrum";
            rc = cmd_spectrum(spec_format);
        } else if (spheres->parsed()) {
            ctx.command = "analyze-spheres";
            rc = cmd_analyze_spheres(ctx, sp_in, sp_report);
        } else if (filter->parsed()) {
            ctx.command = "filter";
            rc = cmd_filter(filter_c);
        } else if (transform->parsed()) {
            ctx.command = "transform-matrix";
            rc = cmd_transform_matrix(tm_matrix, tm_n, tm_expect);
        } else if (reproduce->parsed()) {
            ctx.command = "reproduce-paper";
            rc = cmd_reproduce_paper(quick);
        }
        ctx.write_manifest();
        return rc;
    } catch (const hcp::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hcp::ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hcp::DisjointnessError& e) {
        std::cerr << "disjointness error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const hcp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
