#include <gtest/gtest.h>

#include "cli_matrix.hpp"

using namespace lcr;
using namespace lcr::testing;

namespace {

const std::vector<std::string> catalog_files{"r4.json",  "r8.json",           "u8.json",     "r18.json",
                                             "u16.json", "r4_bridge.hl.json", "z4.ring.json"};

} // namespace

TEST(Format, CatalogFilesRoundTripByteForByte)
{
    for (const auto& f : catalog_files) {
        const std::string text = slurp(catalog_path(f));
        ASSERT_FALSE(text.empty()) << f;
        const StructureFile parsed = parse_structure(text);
        EXPECT_EQ(emit_structure(parsed), text) << f;
        EXPECT_EQ(parse_structure(emit_structure(parsed)), parsed) << f;
    }
}

TEST(Format, CatalogFilesMatchBuilders)
{
    for (const auto& [name, r] : catalog()) {
        const StructureFile f = parse_structure(slurp(catalog_path(name + ".json")));
        EXPECT_EQ(f.kind(), "lcrng");
        EXPECT_EQ(std::get<RawLcRng>(f.payload), r.raw()) << name;
    }
}

TEST(Format, EmitThenParse)
{
    const StructureFile lc = make_file("r4", r4());
    EXPECT_EQ(parse_structure(emit_structure(lc)), lc);
    EXPECT_EQ(std::get<RawLcRng>(parse_structure(emit_structure(lc)).payload).order(), 4u);
    const StructureFile hl = make_file("bridge", from_lcrng(r4()));
    EXPECT_EQ(parse_structure(emit_structure(hl)).kind(), "hlring");
    EXPECT_EQ(parse_structure(emit_structure(make_file("z4", zmod(4)))).kind(), "ring");
}

TEST(Format, EmitIsDeterministicAndSorted)
{
    const std::string a = emit_structure(make_file("r8", r8()));
    EXPECT_EQ(a, emit_structure(make_file("r8", r8())));
    std::vector<std::size_t> pos;
    for (const char* key : {"\"add\"", "\"kind\"", "\"left_identity\"", "\"local_mul\"", "\"metadata\"", "\"mul\"",
                            "\"name\"", "\"order\""})
        pos.push_back(a.find(key));
    EXPECT_TRUE(std::is_sorted(pos.begin(), pos.end()));
    EXPECT_EQ(a.back(), '\n');
}

TEST(Format, OffHaloLocalEntryParsesButFailsValidation)
{
    RawLcRng raw = r4().raw();
    raw.local_mul(1, 1) = 1;
    const StructureFile f = parse_structure(emit_structure({"r4 off-halo", {}, raw}));
    auto v = validate_lcrng(std::get<RawLcRng>(f.payload));
    ASSERT_FALSE(v);
    EXPECT_TRUE(v.has_violation("local-mul-outside-halo"));
}

TEST(Format, ErrorKinds)
{
    auto code_of = [](const std::string& text) {
        try {
            (void)parse_structure(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Usage;
    };
    const std::string r4_text = slurp(catalog_path("r4.json"));
    EXPECT_EQ(code_of(r4_text.substr(0, r4_text.size() / 2)), ErrorCode::MalformedDocument);
    EXPECT_EQ(code_of("[1, 2]"), ErrorCode::MalformedDocument);
    EXPECT_EQ(code_of(R"({"order": 1, "add": [[0]]})"), ErrorCode::MalformedDocument);
    EXPECT_EQ(code_of(R"({"kind": "group", "order": 1, "add": [[0]]})"), ErrorCode::UnknownKind);
    EXPECT_EQ(code_of(R"({"kind": "ring", "order": 2, "add": [[0, 1], [1]], "mul": [[0, 0], [0, 1]], "one": 1})"),
              ErrorCode::ShapeMismatch);
    EXPECT_EQ(code_of(R"({"kind": "ring", "order": 2, "add": [[0, 1], [1, 2]], "mul": [[0, 0], [0, 1]], "one": 1})"),
              ErrorCode::ShapeMismatch);
    EXPECT_EQ(code_of(R"({"kind": "ring", "order": 2, "add": [[0, 1], [1, 0]], "mul": [[0, null], [0, 1]], "one": 1})"),
              ErrorCode::ShapeMismatch);
    EXPECT_EQ(code_of(R"({"kind": "ring", "order": 2, "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 1]], "one": 2})"),
              ErrorCode::ShapeMismatch);
}

class CliMatrix : public ::testing::TestWithParam<std::size_t> {
protected:
    static std::vector<CliCase>& cases()
    {
        static std::vector<CliCase> c = cli_matrix(std::filesystem::path(::testing::TempDir()) / "lcr_cli_matrix");
        return c;
    }
};

TEST_P(CliMatrix, ExitCodeAndReport)
{
    const auto& c = cases().at(GetParam());
    EXPECT_EQ(check_case(c), "") << c.label;
}

INSTANTIATE_TEST_SUITE_P(Cases, CliMatrix,
                         ::testing::Range<std::size_t>(0, cli_matrix(std::filesystem::path(::testing::TempDir()) /
                                                                     "lcr_cli_matrix")
                                                              .size()));

TEST(Cli, ConstructOutputMatchesBuilder)
{
    const auto dir = std::filesystem::path(::testing::TempDir()) / "lcr_cli_construct";
    std::filesystem::create_directories(dir);
    const auto out = (dir / "u8.json").string();
    ASSERT_EQ(run_cli({"construct", "--a", "zmod:2*zmod:2", "--b", "zmod:2", "--hom", "proj1", "--name", "u8", "-o", out})
                  .exit,
              0);
    const StructureFile f = parse_structure(slurp(out));
    EXPECT_EQ(std::get<RawLcRng>(f.payload), u8().raw());
    EXPECT_EQ(slurp(out), slurp(catalog_path("u8.json")));
}

TEST(Cli, VerifyListsEveryAxiom)
{
    const auto r = run_cli({"verify", catalog_path("r4.json")});
    ASSERT_EQ(r.exit, 0);
    for (auto name : lcrng_axioms)
        EXPECT_NE(r.out.find("check " + std::string(name) + ": ok"), std::string::npos) << name;
}

TEST(Cli, SpectrumCsvHasOneRowPerPrime)
{
    const auto r = run_cli({"spectrum", catalog_path("r8.json"), "--format", "csv"});
    ASSERT_EQ(r.exit, 0);
    EXPECT_EQ(r.out, "subset;is_prime;components\n0,2;yes;0,2|0\n0,2,4,6;yes;0,2|0,4\n");
}
