/* Copyright (c) 2026 The ppersist Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#include <doctest.h>

#include "ppersist/field.hpp"
#include "ppersist/rational.hpp"

using namespace ppersist;

TEST_CASE("rational parsing") {
    CHECK(*parse_rational("3/4") == Rat(3, 4));
    CHECK(*parse_rational("-3/4") == Rat(-3, 4));
    CHECK(*parse_rational("7") == Rat(7));
    CHECK(*parse_rational("0.25") == Rat(1, 4));
    CHECK(*parse_rational("-2.5") == Rat(-5, 2));
    CHECK(*parse_rational(" 1/2 ") == Rat(1, 2));
    CHECK(*parse_rational("2/4") == Rat(1, 2));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational("abc"));
    CHECK(!parse_rational(""));
    CHECK(!parse_rational("1/2/3"));
}

TEST_CASE("rational formatting is lowest terms") {
    CHECK(rat_to_string(Rat(4, 2)) == "2");
    CHECK(rat_to_string(Rat(-6, 4)) == "-3/2");
    CHECK(rat_to_string(Rat(0)) == "0");
}

TEST_CASE("sqrt_decimal") {
    CHECK(sqrt_decimal(Rat(4), 3) == "2.000");
    CHECK(sqrt_decimal(Rat(2), 6) == "1.414213");
    CHECK(sqrt_decimal(Rat(1, 4), 2) == "0.50");
    CHECK(sqrt_decimal(Rat(0), 4) == "0.0000");
}

TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("q")->kind == FieldKind::Rationals);
    CHECK(FieldSpec::parse("f2")->modulus == 2);
    CHECK(FieldSpec::parse("fp:5")->modulus == 5);
    CHECK(!FieldSpec::parse("fp:4"));
    CHECK(!FieldSpec::parse("fp:1"));
    CHECK(!FieldSpec::parse("r"));
    CHECK_THROWS(FieldSpec::prime(6));
}

TEST_CASE("field axioms on randomized triples") {
    std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(2),
                                     FieldSpec::prime(5), FieldSpec::prime(97)};
    uint64_t state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    for (const auto& fs : fields) {
        FieldOps ops(fs);
        for (int trial = 0; trial < 200; ++trial) {
            Rat a, b, c;
            if (fs.kind == FieldKind::Rationals) {
                a = Rat(static_cast<long>(next() % 41) - 20, static_cast<long>(next() % 7) + 1);
                b = Rat(static_cast<long>(next() % 41) - 20, static_cast<long>(next() % 7) + 1);
                c = Rat(static_cast<long>(next() % 41) - 20, static_cast<long>(next() % 7) + 1);
            } else {
                a = Rat(next() % fs.modulus);
                b = Rat(next() % fs.modulus);
                c = Rat(next() % fs.modulus);
            }
            CHECK(ops.add(ops.add(a, b), c) == ops.add(a, ops.add(b, c)));
            CHECK(ops.mul(ops.mul(a, b), c) == ops.mul(a, ops.mul(b, c)));
            CHECK(ops.mul(a, ops.add(b, c)) == ops.add(ops.mul(a, b), ops.mul(a, c)));
            CHECK(ops.add(a, ops.neg(a)) == 0);
            if (!ops.is_zero(a)) CHECK(ops.mul(a, ops.inv(a)) == ops.normalize(Rat(1)));
        }
    }
}
