#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "cbc/codes.hpp"
#include "cbc/io.hpp"

using namespace cbc;

TEST_CASE("round trip preserves matrix, classes and declared params") {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        for (const auto& mat :
             {construct_ctd(q), construct_affine_cbc(q), construct_c1(q)}) {
            CodeParams declared = params_of(mat, theoretical_k(
                mat.label.substr(0, mat.label.find('(')), q));
            std::ostringstream os;
            write_matrix(os, mat, declared);
            std::istringstream is(os.str());
            MatrixFile back = read_matrix(is);
            CHECK(back.matrix.m == mat.m);
            CHECK(back.matrix.n == mat.n);
            CHECK(back.matrix.columns == mat.columns);
            CHECK(back.matrix.label == mat.label);
            CHECK(back.matrix.class_partition == mat.class_partition);
            REQUIRE(back.declared.has_value());
            CHECK(back.declared->n == declared.n);
            CHECK(back.declared->N == declared.N);
            CHECK(back.declared->k == declared.k);
            CHECK(back.declared->m == declared.m);
            CHECK(back.declared->c == declared.c);
        }
    }
}

TEST_CASE("bit-exact text layout") {
    IncidenceMatrix id;
    id.m = id.n = 2;
    for (int i = 0; i < 2; ++i) {
        DynBits c(2);
        c.set(i);
        id.columns.push_back(c);
    }
    std::ostringstream os;
    write_matrix(os, id);
    std::string s = os.str();
    CHECK(s.rfind("2 2\n10\n01\n", 0) == 0);
}

TEST_CASE("matrix without metadata parses") {
    std::istringstream is("2 3\n101\n011\n");
    MatrixFile f = read_matrix(is);
    CHECK(f.matrix.m == 2);
    CHECK(f.matrix.n == 3);
    CHECK(f.matrix.get(0, 0));
    CHECK_FALSE(f.matrix.get(1, 0));
    CHECK_FALSE(f.declared.has_value());
}

TEST_CASE("parse errors") {
    {
        std::istringstream is("");
        CHECK_THROWS_AS(read_matrix(is), ParseError);
    }
    {
        std::istringstream is("2 3\n101\n");
        CHECK_THROWS_AS(read_matrix(is), ParseError);
    }
    {
        std::istringstream is("2 3\n1x1\n011\n");
        CHECK_THROWS_AS(read_matrix(is), ParseError);
    }
    {
        std::istringstream is("nope\n");
        CHECK_THROWS_AS(read_matrix(is), ParseError);
    }
    {
        std::istringstream is("2 2\n10\n01\nnot-json\n");
        CHECK_THROWS_AS(read_matrix(is), ParseError);
    }
}
