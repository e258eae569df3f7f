/*
   Copyright 2026 mdsconv contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <mdsconv/serialize.hpp>

namespace {

using namespace mdsconv;

constexpr int kOk = 0, kUsage = 1, kVerification = 2;

void emit_error(const std::string& msg) {
    json j{{"error", msg}};
    std::cout << j.dump() << "\n";
}

FamilyRequest make_request(FamilyKind fam, uint32_t q, uint32_t i, uint32_t r, uint32_t m) {
    FamilyRequest req;
    req.family = fam;
    req.q = q;
    if (fam == FamilyKind::thm_mainIII) {
        req.r = r;
        req.m = m;
    } else {
        req.i = i;
    }
    return req;
}

void export_matrices(const CodeRecord& rec, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto put = [&](const std::string& name, const std::string& text) {
        std::ofstream out(fs::path(dir) / name);
        out << text;
    };
    put("V_G.txt", matrix_text(rec.V.G));
    if (rec.dual) put("dual_G.txt", matrix_text(rec.dual->G));
    if (rec.quantum) {
        put("quantum_X.txt", matrix_text(rec.quantum->X));
        put("quantum_Z.txt", matrix_text(rec.quantum->Z));
    }
    for (const auto& b : rec.blocks) put("block_" + b.name + "_H.txt", matrix_text(b.H));
}

int cmd_build(FamilyKind fam, uint32_t q, uint32_t i, uint32_t r, uint32_t m,
              const std::string& format, const std::string& export_dir,
              const SearchBudget& budget) {
    FamilyRequest req = make_request(fam, q, i, r, m);
    try {
        validate(req);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    try {
        CodeRecord rec = build(req, budget);
        if (!export_dir.empty()) export_matrices(rec, export_dir);
        if (format == "csv")
            std::cout << csv_header() << "\n" << csv_row(rec) << "\n";
        else
            std::cout << record_json(rec).dump(2) << "\n";
        return kOk;
    } catch (const Error& e) {
        emit_error(e.what());
        return kVerification;
    }
}

int cmd_enumerate(FamilyKind fam, const std::vector<uint32_t>& q_list, const std::string& format,
                  const SearchBudget& budget) {
    if (q_list.empty()) {
        std::cerr << "q-list must not be empty\n";
        return kUsage;
    }
    std::vector<EnumEntry> entries = enumerate(fam, q_list, budget);
    bool any_ok = false;
    if (format == "csv") std::cout << csv_header() << ",status\n";
    for (const EnumEntry& e : entries) {
        if (e.record) any_ok = true;
        if (format == "csv") {
            if (e.record) {
                std::cout << csv_row(*e.record) << ",ok\n";
            } else {
                std::cout << family_name(e.req.family) << ',' << e.req.q << ",,,,,,,,\""
                          << e.status << "\"\n";
            }
        } else {
            json j;
            if (e.record) {
                j = record_json(*e.record);
                j["status"] = "ok";
            } else {
                j["family"] = family_name(e.req.family);
                j["q"] = e.req.q;
                if (e.req.family == FamilyKind::thm_mainIII) {
                    j["r"] = e.req.r;
                    j["m"] = e.req.m;
                } else {
                    j["i"] = e.req.i;
                }
                j["status"] = e.status;
            }
            std::cout << j.dump() << "\n";
        }
    }
    return any_ok || entries.empty() ? kOk : kVerification;
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kUsage;
    }
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        emit_error(std::string("invalid JSON: ") + e.what());
        return kVerification;
    }
    try {
        verify_record(j);
        std::cout << json{{"verified", true}}.dump() << "\n";
        return kOk;
    } catch (const std::exception& e) {
        emit_error(e.what());
        return kVerification;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constructs and certifies MDS convolutional BCH codes and the derived "
                 "convolutional stabilizer codes"};
    app.require_subcommand(1);

    SearchBudget budget = SearchBudget::from_env();
    std::string family_str, format = "json", export_dir, record_path;
    uint32_t q = 0, i = 0, r = 0, m = 0;
    std::vector<uint32_t> q_list;
    uint64_t budget_flag = 0;

    auto parse_family = [&](FamilyKind& out) {
        auto fam = family_from_name(family_str);
        if (!fam) {
            std::cerr << "unknown family: " << family_str << "\n";
            return false;
        }
        out = *fam;
        return true;
    };

    CLI::App* b = app.add_subcommand("build", "Build and certify one family instance");
    b->add_option("--family", family_str, "Family name")->required();
    b->add_option("--q", q, "Field size")->required();
    b->add_option("--i", i, "Family index");
    b->add_option("--r", r, "First index (thm_mainIII)");
    b->add_option("--m", m, "Second index (thm_mainIII)");
    b->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    b->add_option("--export-matrices", export_dir, "Directory for matrix text files");
    b->add_option("--budget", budget_flag, "Enumeration budget override");

    CLI::App* e = app.add_subcommand("enumerate", "Sweep all valid indices of a family");
    e->add_option("--family", family_str, "Family name")->required();
    e->add_option("--q-list", q_list, "Field sizes")->required()->delimiter(',');
    e->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    e->add_option("--budget", budget_flag, "Enumeration budget override");

    CLI::App* v = app.add_subcommand("verify", "Re-run all certificates of an exported record");
    v->add_option("record", record_path, "Path to an exported record JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? kOk : kUsage;
    }

    if (budget_flag > 0) budget.enumeration = budget_flag;

    if (b->parsed()) {
        FamilyKind fam;
        if (!parse_family(fam)) return kUsage;
        return cmd_build(fam, q, i, r, m, format, export_dir, budget);
    }
    if (e->parsed()) {
        FamilyKind fam;
        if (!parse_family(fam)) return kUsage;
        return cmd_enumerate(fam, q_list, format, budget);
    }
    return cmd_verify(record_path);
}
