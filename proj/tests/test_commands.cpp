#include <doctest.h>

#include <json.hpp>

#include "ribbon/commands.hpp"
#include "ribbon/json_io.hpp"
#include "ribbon/render.hpp"

using namespace ribbon;
using ribbon::cli::Format;

TEST_CASE("core-quotient output") {
    auto result = cli::cmd_core_quotient("6,5,4,2,2,2", 3, Format::text);
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "partition: [6,5,4,2,2,2]\n"
          "k: 3\n"
          "core: []\n"
          "quotient: ([2,1], [1,1], [2])\n");

    auto empty = cli::cmd_core_quotient("", 4, Format::text);
    CHECK(empty.exit_code == 0);
    CHECK(empty.output ==
          "partition: []\n"
          "k: 4\n"
          "core: []\n"
          "quotient: ([], [], [], [])\n");

    auto blocked = cli::cmd_core_quotient("2,2,2", 6, Format::text);
    CHECK(blocked.exit_code == 0);
    CHECK(blocked.output.find("core: [2,2,2]") != std::string::npos);

    CHECK(cli::cmd_core_quotient("3,5", 2, Format::text).exit_code == 2);
    CHECK(cli::cmd_core_quotient("2,1", 0, Format::text).exit_code == 2);
}

TEST_CASE("core-quotient json round trips") {
    auto result = cli::cmd_core_quotient("6,5,4,2,2,2", 3, Format::json);
    CHECK(result.exit_code == 0);
    auto j = nlohmann::json::parse(result.output);
    CHECK(partition_from_json(j["partition"]) == Partition::parse("6,5,4,2,2,2"));
    CHECK(partition_from_json(j["core"]) == Partition{});
    CHECK(partition_tuple_from_json(j["quotient"]) ==
          PartitionTuple({Partition::parse("2,1"), Partition::parse("1,1"),
                          Partition::parse("2")}));
}

TEST_CASE("fakedeg output") {
    auto plain = cli::cmd_fakedeg("2,2,2", std::nullopt, Format::text);
    CHECK(plain.exit_code == 0);
    CHECK(plain.output ==
          "partition: [2,2,2]\n"
          "f(q,t) = q^12*t^4 + (q^10+q^9+q^8)*t^3 + q^6*t^2\n");

    auto evaluated = cli::cmd_fakedeg("2,2,2", 3, Format::text);
    CHECK(evaluated.exit_code == 0);
    CHECK(evaluated.output.find("f(xi,t) = t^4 + t^2") != std::string::npos);
    CHECK(evaluated.output.find("verdict: MATCH") != std::string::npos);

    auto blocked = cli::cmd_fakedeg("2,2,2", 6, Format::text);
    CHECK(blocked.exit_code == 0);
    CHECK(blocked.output.find("f(xi,t) = t^4 - 2*t^3 + t^2") != std::string::npos);
    CHECK(blocked.output.find("no combinatorial interpretation") != std::string::npos);

    auto one = cli::cmd_fakedeg("2,2,2", 1, Format::text);
    CHECK(one.output.find("f(xi,t) = t^4 + 3*t^3 + t^2") != std::string::npos);
    auto two = cli::cmd_fakedeg("2,2,2", 2, Format::text);
    CHECK(two.output.find("f(xi,t) = t^4 + t^3 + t^2") != std::string::npos);

    // a genuinely non-integral evaluation: f(q,t) = q*t at a cube root
    auto irrational = cli::cmd_fakedeg("1,1", 3, Format::text);
    CHECK(irrational.exit_code == 0);
    CHECK(irrational.output.find("integral: no") != std::string::npos);
    CHECK(irrational.output.find("no combinatorial interpretation") != std::string::npos);
}

TEST_CASE("fakedeg json carries both sides") {
    auto result = cli::cmd_fakedeg("2,2,2", 3, Format::json);
    auto j = nlohmann::json::parse(result.output);
    CHECK(j["verdict"] == "match");
    CHECK(j["integral"] == true);
    CHECK(j["epsilon"] == 1);
    CHECK(bipoly_from_json(j["fake_degree"]).to_string() ==
          "q^12*t^4 + (q^10+q^9+q^8)*t^3 + q^6*t^2");
    CHECK(intpoly_from_json(j["evaluation"]).to_string("t") == "t^4 + t^2");
    CHECK(intpoly_from_json(j["evaluation"]) == intpoly_from_json(j["bst_side"]));
}

TEST_CASE("bst listing mirrors the figures") {
    auto result = cli::cmd_bst("2,2,2", 2, "list", Format::text);
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "partition: [2,2,2]\n"
          "k: 2\n"
          "count: 3\n"
          "tableau 1: DES={1} maj=1 height=2 stat=2\n"
          "1 .\n"
          ". .\n"
          "2 3\n"
          "tableau 2: DES={2} maj=2 height=2 stat=3\n"
          ". .\n"
          "1 2\n"
          "3 .\n"
          "tableau 3: DES={1,2} maj=3 height=0 stat=4\n"
          "1 .\n"
          "2 .\n"
          "3 .\n");

    auto count = cli::cmd_bst("2,2,2", 6, "count", Format::text);
    CHECK(count.output.find("count: 0") != std::string::npos);

    auto single = cli::cmd_bst("5", 5, "list", Format::text);
    CHECK(single.output.find("count: 1") != std::string::npos);

    auto stats = cli::cmd_bst("2,2,2", 2, "stats", Format::text);
    CHECK(stats.output.find("stats: 2,3,4") != std::string::npos);
    CHECK(stats.output.find("epsilon: +1") != std::string::npos);

    CHECK(cli::cmd_bst("2,2,2", 2, "bogus", Format::text).exit_code == 2);
}

TEST_CASE("bst json round trips through the tableau parser") {
    auto result = cli::cmd_bst("2,2,2", 2, "list", Format::json);
    auto j = nlohmann::json::parse(result.output);
    REQUIRE(j["tableaux"].size() == 3);
    for (const auto& entry : j["tableaux"]) {
        BorderStripTableau b = bst_from_json(entry);
        CHECK(b.k() == 2);
        CHECK(b.shape() == Partition::parse("2,2,2"));
        CHECK(entry["stat"] == bst_stat(b));
        CHECK(entry["height"] == b.height());
    }
}

TEST_CASE("character output") {
    auto result = cli::cmd_character("2,2,2", "2,2,2", Format::text);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("character: 3") != std::string::npos);
    CHECK(cli::cmd_character("9", "4,3,2", Format::text).output.find("character: 1") !=
          std::string::npos);
    CHECK(cli::cmd_character("2,2,2", "1,1,1,1,1,1", Format::json).exit_code == 0);
    CHECK(cli::cmd_character("2,1", "2,2", Format::text).exit_code == 2);
}

TEST_CASE("verify command") {
    auto result = cli::cmd_verify(5, std::nullopt, std::nullopt, 1, Format::text);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("all checks passed") != std::string::npos);

    auto json_result = cli::cmd_verify(4, std::nullopt, std::nullopt, 2, Format::json);
    auto j = nlohmann::json::parse(json_result.output);
    CHECK(j["ok"] == true);
    CHECK(j["failures"].empty());
    CHECK(j["pairs_checked"].get<long long>() > 0);

    CHECK(cli::cmd_verify(0, std::nullopt, std::nullopt, 1, Format::text).exit_code == 2);

    auto filtered = cli::cmd_verify(6, 3, std::nullopt, 1, Format::json);
    auto jf = nlohmann::json::parse(filtered.output);
    CHECK(jf["ok"] == true);
    // only sizes divisible by three contribute pairs
    CHECK(jf["pairs_checked"].get<long long>() ==
          static_cast<long long>(partitions_of(3).size() + partitions_of(6).size()));
}

TEST_CASE("tableau and tuple json encodings round trip") {
    for (const auto& b : all_bst(Partition::parse("4,3,1"), 2)) {
        CHECK(bst_from_json(to_json(b)) == b);
        StandardTableauTuple t = littlewood_map(b);
        CHECK(syt_tuple_from_json(to_json(t)) == t);
    }
    for (const auto& t : all_ssyt_tuples(
             PartitionTuple({Partition::parse("2"), Partition::parse("1,1")}), 3))
        CHECK(ssyt_tuple_from_json(to_json(t)) == t);
}

TEST_CASE("renderings show only tail labels") {
    BorderStripTableau b(3, {Partition{}, Partition::parse("2,1"), Partition::parse("3,3")});
    CHECK(render_bst(b) ==
          ". . .\n"
          "1 2 .\n");
    CHECK(render_bst(BorderStripTableau(1, {Partition{}})) == "");

    // the figure tableau: tails sit exactly where the picture labels them
    BorderStripTableau figure(
        3, {Partition{}, Partition::parse("2,1"), Partition::parse("3,3"),
            Partition::parse("3,3,3"), Partition::parse("4,4,4"), Partition::parse("4,4,4,2,1"),
            Partition::parse("4,4,4,2,2,2"), Partition::parse("6,5,4,2,2,2")});
    CHECK(render_bst(figure) ==
          ". . . . . .\n"
          "1 2 . . 7\n"
          "3 . . 4\n"
          ". .\n"
          "5 .\n"
          "6 .\n");
}
