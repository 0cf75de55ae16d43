#include "hpath/generators.hpp"
#include "hpath/partitioner.hpp"
#include "hpath_cli/commands.hpp"
#include "hpath_cli/files.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

using namespace hpath;
using namespace hpath::cli;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
    fs::path dir;
    std::ostringstream out;
    std::ostringstream err;

    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir = fs::temp_directory_path() / (std::string("hpart_") + info->name());
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string path(const char* name) const { return (dir / name).string(); }

    int call(std::vector<std::string> args) {
        out.str("");
        err.str("");
        return run(args, out, err);
    }
};

} // namespace

TEST(ColoringFile, HeaderAndRoundTrip) {
    const Coloring c = random_coloring(9, 3, 0.5, 4);
    const std::string text = write_coloring_file(c);
    EXPECT_EQ(text.substr(0, 9), "HPC1 9 3\n");
    EXPECT_EQ(text.back(), '\n');
    const Coloring back = read_coloring_file(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(write_coloring_file(back), text);
}

TEST(ColoringFile, MsbFirstBitOrder) {
    ColoringBuilder b(4, 3);
    b.set(0, Color::Red);
    const std::string text = write_coloring_file(std::move(b).build());
    // One byte 0x80 -> "gA==".
    EXPECT_EQ(text, "HPC1 4 3\ngA==\n");
}

TEST(ColoringFile, EmptyTable) {
    const std::string text = write_coloring_file(constant_coloring(2, 3, Color::Red));
    EXPECT_EQ(text, "HPC1 2 3\n\n");
    EXPECT_EQ(read_coloring_file(text).edge_count(), 0U);
}

TEST(ColoringFile, RejectsMalformed) {
    EXPECT_THROW(read_coloring_file("HPC1 6 3\n"), InputError);
    EXPECT_THROW(read_coloring_file("HPC2 4 3\ngA==\n"), InputError);
    EXPECT_THROW(read_coloring_file("HPC1 4 x\ngA==\n"), InputError);
    EXPECT_THROW(read_coloring_file("HPC1 4 3\ng!==\n"), InputError);
    // C(4,3) = 4 edges: the low four bits of the byte are padding.
    EXPECT_THROW(read_coloring_file("HPC1 4 3\ngQ==\n"), InputError);
    try {
        read_coloring_file("HPC1 6 3\ngA==\n");
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("bad bit-table length"), std::string::npos);
    }
}

TEST(Base64, KnownVectors) {
    EXPECT_EQ(base64_encode({'f', 'o', 'o', 'b'}), "Zm9vYg==");
    EXPECT_EQ(base64_decode("Zm9vYg=="), (std::vector<unsigned char>{'f', 'o', 'o', 'b'}));
    EXPECT_EQ(base64_decode("Zm9vYmE="), (std::vector<unsigned char>{'f', 'o', 'o', 'b', 'a'}));
}

TEST(PartitionFile, RoundTripByteIdentical) {
    for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{20, 3}, {12, 4}, {3, 5}, {9, 2}}) {
        const Coloring c = random_coloring(n, k, 0.5, n);
        const PartitionDocument doc = make_document(c, solve(c), true);
        const std::string text = write_partition_file(doc);
        const PartitionDocument back = read_partition_file(text);
        EXPECT_EQ(back, doc);
        EXPECT_EQ(write_partition_file(back), text);
    }
}

TEST(PartitionFile, RejectsMalformed) {
    EXPECT_THROW(read_partition_file("{"), InputError);
    EXPECT_THROW(read_partition_file(R"({"n": 4})"), InputError);
}

TEST_F(CliTest, GenExtremal) {
    ASSERT_EQ(call({"gen", "extremal", "--k", "3", "--m", "8", "-o", path("e.hpc")}), kExitOk);
    EXPECT_NE(out.str().find("red=680"), std::string::npos);
    const std::string text = read_text(path("e.hpc"));
    EXPECT_EQ(text.substr(0, 10), "HPC1 21 3\n");
    EXPECT_EQ(read_coloring_file(text).red_count(), 680U);
}

TEST_F(CliTest, GenConstAndRandomDeterminism) {
    ASSERT_EQ(call({"gen", "const", "--n", "8", "--k", "3", "--color", "red", "-o", path("c.hpc")}), kExitOk);
    EXPECT_EQ(read_coloring_file(read_text(path("c.hpc"))).red_count(), 56U);
    ASSERT_EQ(call({"gen", "random", "--n", "6", "--k", "3", "--p", "0.5", "--seed", "42", "-o", path("a.hpc")}),
              kExitOk);
    ASSERT_EQ(call({"gen", "random", "--n", "6", "--k", "3", "--p", "0.5", "--seed", "42", "-o", path("b.hpc")}),
              kExitOk);
    EXPECT_EQ(read_text(path("a.hpc")), read_text(path("b.hpc")));
}

TEST_F(CliTest, GenUsageErrors) {
    EXPECT_EQ(call({"gen", "random", "--k", "3"}), kExitInput);
    EXPECT_EQ(call({"gen", "bogus", "--n", "5"}), kExitInput);
    EXPECT_EQ(call({"gen", "random", "--n", "6", "--p", "2"}), kExitInput);
    EXPECT_EQ(call({}), kExitInput);
}

TEST_F(CliTest, SolveAndVerify) {
    ASSERT_EQ(call({"gen", "const", "--n", "8", "--k", "3", "-o", path("c.hpc")}), kExitOk);
    ASSERT_EQ(call({"solve", path("c.hpc"), "-o", path("c.json")}), kExitOk);
    EXPECT_NE(out.str().find("status=Perfect"), std::string::npos);
    const PartitionDocument doc = read_partition_file(read_text(path("c.json")));
    EXPECT_EQ(doc.status, SolveStatus::Perfect);
    EXPECT_TRUE(doc.leftover.empty());
    EXPECT_EQ(call({"verify", path("c.hpc"), path("c.json")}), kExitOk);
}

TEST_F(CliTest, SolveExtremal) {
    ASSERT_EQ(call({"gen", "extremal", "--k", "3", "--m", "8", "-o", path("e.hpc")}), kExitOk);
    ASSERT_EQ(call({"solve", path("e.hpc"), "--trace", "-o", path("e.json")}), kExitOk);
    const PartitionDocument doc = read_partition_file(read_text(path("e.json")));
    EXPECT_EQ(doc.status, SolveStatus::WithinBound);
    EXPECT_EQ(doc.leftover.size(), 1U);
    EXPECT_EQ(doc.trace.size(), doc.move_count);
    EXPECT_EQ(call({"verify", path("e.hpc"), path("e.json")}), kExitOk);
}

TEST_F(CliTest, SolveTruncatedFile) {
    ASSERT_EQ(call({"gen", "extremal", "--k", "3", "--m", "8", "-o", path("e.hpc")}), kExitOk);
    const std::string text = read_text(path("e.hpc"));
    write_text(path("t.hpc"), text.substr(0, text.size() / 2));
    EXPECT_EQ(call({"solve", path("t.hpc")}), kExitInput);
    EXPECT_NE(err.str().find("bad bit-table length"), std::string::npos);
    EXPECT_EQ(call({"solve", path("missing.hpc")}), kExitInput);
}

TEST_F(CliTest, VerifyRejectsDuplicatedVertex) {
    const Coloring c = constant_coloring(8, 3, Color::Red);
    write_text(path("c.hpc"), write_coloring_file(c));
    PartitionDocument doc;
    doc.n = 8;
    doc.k = 3;
    doc.red = LoosePath{3, {0, 1, 2, 3, 4, 5, 6}, Color::Red};
    doc.blue = LoosePath{3, {6}, std::nullopt};
    write_text(path("p.json"), write_partition_file(doc));
    EXPECT_EQ(call({"verify", path("c.hpc"), path("p.json")}), kExitVerify);
    EXPECT_NE(out.str().find("not disjoint"), std::string::npos);
}

TEST_F(CliTest, VerifyRejectsLeftoverOfKMinus1) {
    const Coloring c = constant_coloring(9, 3, Color::Red);
    write_text(path("c.hpc"), write_coloring_file(c));
    PartitionDocument doc;
    doc.n = 9;
    doc.k = 3;
    doc.red = LoosePath{3, {0, 1, 2, 3, 4, 5, 6}, Color::Red};
    doc.leftover = {7, 8};
    doc.status = SolveStatus::WithinBound;
    write_text(path("p.json"), write_partition_file(doc));
    EXPECT_EQ(call({"verify", path("c.hpc"), path("p.json")}), kExitVerify);
    EXPECT_NE(out.str().find("leftover bound"), std::string::npos);
}

TEST_F(CliTest, VerifyRejectsMismatchedSize) {
    write_text(path("a.hpc"), write_coloring_file(constant_coloring(8, 3, Color::Red)));
    write_text(path("b.hpc"), write_coloring_file(constant_coloring(10, 3, Color::Red)));
    ASSERT_EQ(call({"solve", path("b.hpc"), "-o", path("b.json")}), kExitOk);
    EXPECT_EQ(call({"verify", path("a.hpc"), path("b.json")}), kExitInput);
}

TEST_F(CliTest, VerifyRoundTripOnRandomCorpus) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        const std::size_t k = 2 + rng() % 4;
        const std::size_t n = 1 + rng() % 16;
        write_text(path("x.hpc"), write_coloring_file(random_coloring(n, k, 0.5, rng())));
        ASSERT_EQ(call({"solve", path("x.hpc"), "-o", path("x.json")}), kExitOk);
        ASSERT_EQ(call({"verify", path("x.hpc"), path("x.json")}), kExitOk) << out.str();
    }
}

TEST_F(CliTest, SweepCsv) {
    ASSERT_EQ(call({"sweep", "--k", "3", "--n", "8,10,12", "--trials", "100", "-o", path("s.csv")}), kExitOk);
    std::istringstream csv(read_text(path("s.csv")));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "n,k,seed,status,leftover,moves,fallback_hits,wall_time");
    int rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
        EXPECT_NE(line.find(",Perfect,0,"), std::string::npos) << line;
    }
    EXPECT_EQ(rows, 300);
}

TEST_F(CliTest, SweepLeftoverColumnAndDeterminism) {
    ASSERT_EQ(call({"sweep", "--k", "4", "--n", "12", "--trials", "100", "--seed", "5", "-o", path("a.csv")}),
              kExitOk);
    ASSERT_EQ(call({"sweep", "--k", "4", "--n", "12", "--trials", "100", "--seed", "5", "-o", path("b.csv")}),
              kExitOk);
    const auto strip_time = [](const std::string& text) {
        std::istringstream in(text);
        std::string line;
        std::string out;
        while (std::getline(in, line)) {
            out += line.substr(0, line.rfind(',')) + "\n";
        }
        return out;
    };
    const std::string a = strip_time(read_text(path("a.csv")));
    EXPECT_EQ(a, strip_time(read_text(path("b.csv"))));
    std::istringstream in(a);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        EXPECT_NE(line.find(",WithinBound,1,"), std::string::npos) << line;
    }
}

TEST_F(CliTest, OracleMinUncovered) {
    write_text(path("k4.hpc"), write_coloring_file(random_coloring(4, 3, 0.5, 1)));
    ASSERT_EQ(call({"oracle", "min-uncovered", path("k4.hpc")}), kExitOk);
    EXPECT_NE(out.str().find("min_uncovered=0"), std::string::npos);
    ASSERT_EQ(call({"oracle", "min-uncovered", path("k4.hpc"), "--limit", "0"}), kExitOk);
    EXPECT_NE(out.str().find("unknown >= 0"), std::string::npos);
}

TEST_F(CliTest, OracleRefusesLargeInputWithoutForce) {
    write_text(path("big.hpc"), write_coloring_file(random_coloring(14, 3, 0.5, 1)));
    EXPECT_EQ(call({"oracle", "min-uncovered", path("big.hpc")}), kExitInput);
    EXPECT_NE(err.str().find("--force"), std::string::npos);
    EXPECT_EQ(call({"oracle", "min-uncovered", path("big.hpc"), "--force"}), kExitOk);
    EXPECT_NE(out.str().find("min_uncovered=0"), std::string::npos);
}

TEST_F(CliTest, OracleExtremal) {
    ASSERT_EQ(call({"oracle", "extremal", "--k", "3", "--m", "2"}), kExitOk);
    EXPECT_NE(out.str().find("agree=yes"), std::string::npos);
    ASSERT_EQ(call({"oracle", "extremal", "--k", "3", "--m", "8"}), kExitOk);
    EXPECT_NE(out.str().find("profile_min=1"), std::string::npos);
}
