#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "qd/cli.hpp"
#include "qd/image_io.hpp"

using namespace qd;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run qdyn(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("qd_cli_" + name)).string();
}

}  // namespace

TEST_CASE("complex and list flags") {
    CHECK(parse_complex("0.3") == std::complex<double>(0.3, 0));
    CHECK(parse_complex("-1.5,2e-3") == std::complex<double>(-1.5, 2e-3));
    CHECK(parse_complex(" 1 , 2 ") == std::complex<double>(1, 2));
    CHECK_THROWS_AS(parse_complex("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1,"), std::invalid_argument);
    CHECK(parse_real_list("-0.2,0,0.6") == std::vector<double>{-0.2, 0, 0.6});
    CHECK_THROWS_AS(parse_real_list("1,,2"), std::invalid_argument);
}

TEST_CASE("julia writes a picture with a non-escaping region") {
    const std::string path = temp_path("j.ppm");
    const Run r = qdyn({"julia", "--t", "0", "--center", "0,0", "--width", "4", "--px", "256", "--max-iter", "100",
                        "--out", path});
    CHECK(r.code == 0);
    const ImageBuffer img = read_ppm(path);
    CHECK(img.width() == 256);
    CHECK(r.out.find("non_escaping=0 ") == std::string::npos);
    CHECK(r.out.find("non_escaping=") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("fixpoint at t = 0") {
    const Run r = qdyn({"fixpoint", "--t", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("multiplier=0,0\n") != std::string::npos);
    CHECK(r.out.find("classification=Superattracting\n") != std::string::npos);
    CHECK(r.out.find("c=0,0\n") != std::string::npos);
    CHECK(r.out.find("c_in_(-0.75,0.25)=yes") != std::string::npos);
}

TEST_CASE("verify report format") {
    const Run r = qdyn({"verify", "--suite", "group", "--seed", "7"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        CHECK(line.rfind("PASS group.", 0) == 0);
        CHECK(line.find(" tol=") != std::string::npos);
    }
    CHECK(lines > 0);
    CHECK(qdyn({"verify", "--suite", "group", "--seed", "7"}).out == r.out);
}

TEST_CASE("flag errors exit with 2") {
    CHECK(qdyn({}).code == 2);
    CHECK(qdyn({"julia", "--bogus"}).code == 2);
    CHECK(qdyn({"julia", "--px", "3"}).code == 2);
    CHECK(qdyn({"julia", "--t", "x"}).code == 2);
    CHECK(qdyn({"julia", "--width", "-1"}).code == 2);
    CHECK(qdyn({"tiles", "--model", "kleinian"}).code == 2);
    CHECK(qdyn({"param", "--t-min", "1", "--t-max", "0"}).code == 2);
    CHECK(qdyn({"verify", "--suite", "none"}).code == 2);
}

TEST_CASE("numeric errors exit with 1") {
    const Run r = qdyn({"fixpoint", "--t", "-0.8"});
    CHECK(r.code == 1);
    CHECK(r.err.find("not in family") != std::string::npos);
    CHECK(qdyn({"julia", "--out", "/nonexistent/dir/x.ppm", "--px", "16"}).code == 1);
}

TEST_CASE("help lists flags with defaults") {
    for (const char* sub : {"julia", "param", "tiles", "flow", "fixpoint", "verify"}) {
        const Run r = qdyn({sub, "--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("--seed") != std::string::npos);
        CHECK(r.out.find("--threads") != std::string::npos);
    }
    CHECK(qdyn({"julia", "--help"}).out.find("[256]") != std::string::npos);
    CHECK(qdyn({"verify", "--help"}).out.find("[all]") != std::string::npos);
}

TEST_CASE("tiles and flow write their outputs") {
    const std::string img = temp_path("t.ppm"), fimg = temp_path("f.ppm"), csv = temp_path("f.csv");
    CHECK(qdyn({"tiles", "--model", "gamma_d", "--d", "3", "--depth", "4", "--px", "64", "--out", img}).code == 0);
    CHECK(read_ppm(img).width() == 64);
    CHECK(qdyn({"flow", "--t-list", "0,0.3", "--samples", "64", "--out-img", fimg, "--out-csv", csv}).code == 0);
    CHECK(std::filesystem::file_size(csv) > 0);
    for (const auto& p : {img, fimg, csv}) std::filesystem::remove(p);
}
