#include <doctest.h>

#include "basilica/errors.hpp"
#include "basilica/node_address.hpp"

using namespace basilica;

TEST_CASE("packing puts s1 in the most significant position") {
  const node_address ba = node_address::parse("ba");
  CHECK(ba.level() == 2);
  CHECK(ba.index() == 2);  // b=1 then a=0
  CHECK(node_address::parse("ab").index() == 1);
  CHECK(node_address::parse("bbb").index() == 7);
  CHECK(node_address::parse("").is_root());
}

TEST_CASE("round trip through strings") {
  for (const char* s : {"", "a", "b", "ab", "ba", "aabba", "bbbbbb"})
    CHECK(node_address::parse(s).to_string() == s);
}

TEST_CASE("parent drops the last symbol") {
  CHECK(node_address::parse("abb").parent() == node_address::parse("ab"));
  CHECK(node_address::parse("a").parent() == node_address());
  CHECK_THROWS_AS(node_address().parent(), input_error);
}

TEST_CASE("children and siblings") {
  const node_address x = node_address::parse("ab");
  CHECK(x.child(symbol::a) == node_address::parse("aba"));
  CHECK(x.child(symbol::b) == node_address::parse("abb"));
  CHECK(x.sibling() == node_address::parse("aa"));
  CHECK(x.at(1) == symbol::a);
  CHECK(x.at(2) == symbol::b);
}

TEST_CASE("invalid addresses are rejected") {
  CHECK_THROWS_AS(node_address(2, 4), input_error);
  CHECK_THROWS_AS(node_address(-1, 0), input_error);
  CHECK_THROWS_AS(node_address::parse("abc"), input_error);
}
