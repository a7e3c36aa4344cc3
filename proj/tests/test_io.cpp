#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mwd/errors.hpp"
#include "mwd/io.hpp"
#include "test_util.hpp"

using namespace mwd;

TEST_CASE("reading a points file") {
    std::istringstream in("010\n110\n\n# a comment\n210\n212\n");
    auto V = read_points(in, PrimeField(3));
    CHECK(V.points == tu::vset({"010", "110", "210", "212"}, 3).points);

    std::istringstream commas("11,0,12\n0,1,2\n");
    auto W = read_points(commas, PrimeField(13));
    CHECK(W.points.size() == 2);
    CHECK(W.points[0] == Point({11, 0, 12}));
}

TEST_CASE("points file errors carry line numbers") {
    auto message = [](auto reader) {
        try {
            reader();
            return std::string();
        } catch (const input_error& e) {
            return std::string(e.what());
        }
    };

    std::istringstream bad_digit("000\n021\n");
    auto msg = message([&] { return read_points(bad_digit, PrimeField(2)); });
    CHECK(msg.find("line 2") != std::string::npos);

    std::istringstream trailing("000 extra\n");
    msg = message([&] { return read_points(trailing, PrimeField(2)); });
    CHECK(msg.find("line 1") != std::string::npos);
    CHECK(msg.find("extra") != std::string::npos);

    std::istringstream empty("# nothing\n\n");
    CHECK_THROWS_AS(read_points(empty, PrimeField(2)), input_error);

    std::istringstream dup("01\n01\n");
    CHECK_THROWS_AS(read_points(dup, PrimeField(2)), input_error);
}

TEST_CASE("reading a data file") {
    std::istringstream in("000 1\n101 1\n110 0\n011 1\n");
    auto D = read_data(in, PrimeField(2));
    CHECK(D.inputs.points == tu::vset({"000", "101", "110", "011"}, 2).points);
    CHECK(D.outputs.values == std::vector<std::uint32_t>{1, 1, 0, 1});

    std::istringstream missing("000 1\n101\n");
    CHECK_THROWS_WITH_AS(read_data(missing, PrimeField(2)),
                         doctest::Contains("line 2"), input_error);

    std::istringstream bad_value("000 1\n101 2\n");
    CHECK_THROWS_WITH_AS(read_data(bad_value, PrimeField(2)),
                         doctest::Contains("line 2"), input_error);

    std::istringstream junk_value("000 x\n");
    CHECK_THROWS_AS(read_data(junk_value, PrimeField(2)), input_error);

    std::istringstream three_fields("000 1 1\n");
    CHECK_THROWS_AS(read_data(three_fields, PrimeField(2)), input_error);
}

TEST_CASE("reading from paths") {
    const char* path = "io_test_points.txt";
    {
        std::ofstream out(path);
        out << "00\n01\n";
    }
    auto V = read_points_file(path, PrimeField(2));
    CHECK(V.points.size() == 2);
    std::remove(path);

    CHECK_THROWS_WITH_AS(read_points_file("does_not_exist.txt", PrimeField(2)),
                         doctest::Contains("cannot open"), input_error);

    const char* data_path = "io_test_data.txt";
    {
        std::ofstream out(data_path);
        out << "00 1\n21 0\n";
    }
    CHECK_THROWS_WITH_AS(read_data_file(data_path, PrimeField(2)),
                         doctest::Contains("io_test_data.txt: line 2"),
                         input_error);
    std::remove(data_path);
}
