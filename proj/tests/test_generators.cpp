#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qconv/generators.hpp>

using namespace qconv;
using gen::SeriesName;

namespace {
void check_prefix(SeriesName name, std::initializer_list<long long> want) {
    const Series s = gen::build(name, want.size() - 1);
    std::size_t i = 0;
    for (auto w : want) {
        CAPTURE(gen::name_str(name));
        CAPTURE(i);
        CHECK(s[i] == w);
        ++i;
    }
}
}  // namespace

TEST_CASE("frozen leading coefficients") {
    check_prefix(SeriesName::P, {1, -24, -72, -96, -168, -144, -288, -192, -360});
    check_prefix(SeriesName::Q, {1, 240, 2160, 6720, 17520, 30240, 60480});
    check_prefix(SeriesName::R, {1, -504, -16632, -122976, -532728, -1575504});
    check_prefix(SeriesName::GP, {1, 8, -8, 32, -40, 48, -32, 64, -104});
    check_prefix(SeriesName::GE, {1, 24, 24, 96, 24, 144, 96, 192, 24});
    check_prefix(SeriesName::GQ, {1, -16, 112, -448, 1136, -2016, 3136, -5504, 9328});
    check_prefix(SeriesName::phi, {1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0});
    check_prefix(SeriesName::psi, {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0});
    check_prefix(SeriesName::f_neg, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1});
    check_prefix(SeriesName::wt5_series, {1, 8, -248, 1952, -8440, 25008});
    check_prefix(SeriesName::qmono, {0, 1, 0});
    check_prefix(SeriesName::mu, {1, -8, 12, 64, -210, -96, 1016, -512, -2043, 1680});
    check_prefix(SeriesName::nu, {1, 8, 28, 64, 126, 224, 344, 512, 757, 1008});
}

TEST_CASE("parity series hold the wrong-parity coefficients at zero") {
    // no leading constants; coefficient n is wt(n)/wh(n)/wt_3(n) on one parity
    check_prefix(SeriesName::GP02, {0, 0, -1, 0, -5, 0, -4, 0, -13});
    check_prefix(SeriesName::GP12, {0, 1, 0, 4, 0, 6, 0, 8, 0});
    check_prefix(SeriesName::GE02, {0, 0, 1, 0, 1, 0, 4, 0, 1});
    check_prefix(SeriesName::GE12, {0, 1, 0, 4, 0, 6, 0, 8, 0});
    check_prefix(SeriesName::GQ02, {0, 0, -7, 0, -71, 0, -196, 0, -583});
    check_prefix(SeriesName::GQ12, {0, 1, 0, 28, 0, 126, 0, 344, 0});
}

TEST_CASE("checked mode validates every name against its second construction") {
    for (auto name :
         {SeriesName::P, SeriesName::Q, SeriesName::R, SeriesName::GP, SeriesName::GE,
          SeriesName::GQ, SeriesName::phi, SeriesName::psi, SeriesName::f_neg,
          SeriesName::GP02, SeriesName::GP12, SeriesName::GE02, SeriesName::GE12,
          SeriesName::GQ02, SeriesName::GQ12, SeriesName::wt5_series, SeriesName::qmono,
          SeriesName::mu, SeriesName::nu}) {
        CAPTURE(gen::name_str(name));
        CHECK_NOTHROW(gen::build(name, 80, gen::BuildMode::checked));
    }
}

TEST_CASE("representation series are theta powers") {
    const Series r4 = gen::rep_series(gen::RepKind::squares, 4, 12);
    const long long want_r4[] = {1, 8, 24, 32, 24, 48, 96, 64, 24, 104, 144, 96, 96};
    for (int n = 0; n <= 12; ++n) CHECK(r4[n] == want_r4[n]);
    const Series d8 = gen::rep_series(gen::RepKind::triangular, 8, 10);
    const long long want_d8[] = {1, 8, 28, 64, 126, 224, 344, 512, 757, 1008, 1332};
    for (int n = 0; n <= 10; ++n) CHECK(d8[n] == want_d8[n]);
}

TEST_CASE("name table round-trips") {
    for (auto name : {SeriesName::P, SeriesName::GQ12, SeriesName::f_neg,
                      SeriesName::wt5_series, SeriesName::nu}) {
        gen::SeriesName back;
        REQUIRE(gen::lookup_name(gen::name_str(name), back));
        CHECK(back == name);
    }
    gen::SeriesName out;
    CHECK_FALSE(gen::lookup_name("no_such_series", out));
}
