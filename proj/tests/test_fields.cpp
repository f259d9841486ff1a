#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include <lpkit/fields.hpp>

using namespace lpkit;

namespace {

// Independent reference for the binary-field product: schoolbook polynomial
// multiplication over GF(2) followed by long division by the modulus.
unsigned reference_gf2k_mul(unsigned a, unsigned b, unsigned modulus_bits, int k) {
    unsigned prod = 0;
    for (int i = 0; i < 8; ++i)
        if (a & (1u << i))
            for (int j = 0; j < 8; ++j)
                if (b & (1u << j)) prod ^= 1u << (i + j);
    for (int deg = 15; deg >= k; --deg)
        if (prod & (1u << deg)) prod ^= modulus_bits << (deg - k);
    return prod;
}

FieldElement rational_from(int num, int den = 1) {
    const FieldDescriptor q = FieldDescriptor::rational();
    return FieldElement::from_integer(q, num) / FieldElement::from_integer(q, den);
}

std::vector<FieldElement> sample_pool(const FieldDescriptor& f) {
    if (f.kind() == FieldKind::Rational) {
        std::vector<FieldElement> pool;
        for (int num = -4; num <= 4; ++num)
            for (int den = 1; den <= 3; ++den) pool.push_back(rational_from(num, den));
        return pool;
    }
    return enumerate_elements(f);
}

}  // namespace

TEST(Fields, RationalDivision) {
    EXPECT_EQ(format_element(rational_from(1) / rational_from(-2)), "-1/2");
}

TEST(Fields, Gf4ProductsMatchReferenceTable) {
    const FieldDescriptor g4 = FieldDescriptor::binary(2);
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b) {
            const unsigned expected = reference_gf2k_mul(a, b, 0b111, 2);
            const FieldElement got = FieldElement::from_bits(g4, a) * FieldElement::from_bits(g4, b);
            EXPECT_EQ(got.bit_pattern(), expected) << "a=" << a << " b=" << b;
        }
    const FieldElement w = parse_element(g4, "w");
    EXPECT_EQ(format_element(w * w), "w+1");
}

TEST(Fields, Gf8ProductsMatchReferenceTable) {
    const FieldDescriptor g8 = FieldDescriptor::binary(3);
    for (unsigned a = 0; a < 8; ++a)
        for (unsigned b = 0; b < 8; ++b) {
            const unsigned expected = reference_gf2k_mul(a, b, 0b1011, 3);
            const FieldElement got = FieldElement::from_bits(g8, a) * FieldElement::from_bits(g8, b);
            EXPECT_EQ(got.bit_pattern(), expected) << "a=" << a << " b=" << b;
        }
}

TEST(Fields, CharacteristicTwoAddition) {
    const FieldDescriptor g4 = FieldDescriptor::binary(2);
    const FieldElement w = parse_element(g4, "w");
    EXPECT_TRUE((w + w).is_zero());
}

TEST(Fields, ParseNormalizesRationals) {
    const FieldDescriptor q = FieldDescriptor::rational();
    EXPECT_EQ(format_element(parse_element(q, "-14/-4")), "7/2");
    EXPECT_EQ(format_element(parse_element(q, "14/-4")), "-7/2");
    EXPECT_EQ(format_element(parse_element(q, "+6/2")), "3");
    EXPECT_EQ(format_element(parse_element(q, "0/5")), "0");
}

TEST(Fields, ParseReducesResidues) {
    const FieldDescriptor f7 = FieldDescriptor::prime(7);
    EXPECT_EQ(format_element(parse_element(f7, "10")), "3");
    EXPECT_EQ(format_element(parse_element(f7, "-1")), "6");
}

TEST(Fields, ParseBinaryPolynomials) {
    const FieldDescriptor g4 = FieldDescriptor::binary(2);
    EXPECT_EQ(parse_element(g4, "w+1").bit_pattern(), 0b11u);
    EXPECT_EQ(parse_element(g4, "w^2").bit_pattern(), 0b11u);  // reduced mod w^2+w+1
    EXPECT_EQ(parse_element(g4, "w+w").bit_pattern(), 0u);
    const FieldDescriptor g8 = FieldDescriptor::binary(3);
    EXPECT_EQ(format_element(parse_element(g8, "w^2+w+1")), "w^2+w+1");
    EXPECT_EQ(parse_element(g8, "w^3").bit_pattern(), 0b011u);  // w^3 = w+1
}

TEST(Fields, FormatParseIdempotent) {
    for (const FieldDescriptor& f :
         {FieldDescriptor::rational(), FieldDescriptor::prime(11), FieldDescriptor::binary(2),
          FieldDescriptor::binary(3)}) {
        for (const FieldElement& e : sample_pool(f)) {
            const std::string once = format_element(e);
            EXPECT_EQ(parse_element(f, once), e);
            EXPECT_EQ(format_element(parse_element(f, once)), once);
        }
    }
}

TEST(Fields, Characteristic) {
    EXPECT_EQ(FieldDescriptor::rational().characteristic(), 0);
    EXPECT_EQ(FieldDescriptor::prime(5).characteristic(), 5);
    EXPECT_EQ(FieldDescriptor::binary(2).characteristic(), 2);
}

TEST(Fields, DescriptorValidation) {
    EXPECT_THROW(FieldDescriptor::prime(4), FieldError);
    EXPECT_THROW(FieldDescriptor::prime(1), FieldError);
    EXPECT_THROW(FieldDescriptor::binary(4), FieldError);
    EXPECT_THROW(FieldDescriptor::binary(1), FieldError);
    EXPECT_NO_THROW(FieldDescriptor::prime(2));
}

TEST(Fields, FieldAxiomsOnRandomTriples) {
    std::mt19937_64 rng(20240817);
    for (const FieldDescriptor& f :
         {FieldDescriptor::rational(), FieldDescriptor::prime(7), FieldDescriptor::binary(2),
          FieldDescriptor::binary(3)}) {
        const std::vector<FieldElement> pool = sample_pool(f);
        auto draw = [&]() { return pool[rng() % pool.size()]; };
        for (int trial = 0; trial < 1000; ++trial) {
            const FieldElement a = draw(), b = draw(), c = draw();
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
            EXPECT_TRUE((a - a).is_zero());
        }
    }
}

TEST(Fields, BinaryFieldSizes) {
    const auto g4 = enumerate_elements(FieldDescriptor::binary(2));
    const auto g8 = enumerate_elements(FieldDescriptor::binary(3));
    EXPECT_EQ(g4.size(), 4u);
    EXPECT_EQ(g8.size(), 8u);
    std::set<unsigned> seen4, seen8;
    for (const auto& e : g4) seen4.insert(e.bit_pattern());
    for (const auto& e : g8) seen8.insert(e.bit_pattern());
    EXPECT_EQ(seen4.size(), 4u);
    EXPECT_EQ(seen8.size(), 8u);
}

TEST(Fields, FrobeniusIsABijection) {
    for (int k : {2, 3}) {
        const FieldDescriptor f = FieldDescriptor::binary(k);
        std::set<unsigned> images;
        for (const FieldElement& e : enumerate_elements(f)) images.insert((e * e).bit_pattern());
        EXPECT_EQ(images.size(), static_cast<std::size_t>(1) << k);
    }
}

TEST(Fields, MixedFieldOperationsThrow) {
    const FieldElement a = FieldElement::from_integer(FieldDescriptor::prime(5), 2);
    const FieldElement b = FieldElement::from_integer(FieldDescriptor::prime(7), 2);
    const FieldElement c = FieldElement::from_integer(FieldDescriptor::rational(), 2);
    EXPECT_THROW(a + b, FieldError);
    EXPECT_THROW(a * c, FieldError);
    EXPECT_THROW((void)(a == b), FieldError);
}

TEST(Fields, DivisionByZeroThrows) {
    const FieldDescriptor q = FieldDescriptor::rational();
    EXPECT_THROW(FieldElement::one(q) / FieldElement::zero(q), FieldError);
    EXPECT_THROW(FieldElement::zero(FieldDescriptor::binary(2)).inverse(), FieldError);
}

TEST(Fields, ParseErrors) {
    const FieldDescriptor q = FieldDescriptor::rational();
    EXPECT_THROW(parse_element(q, ""), ParseError);
    EXPECT_THROW(parse_element(q, "x"), ParseError);
    EXPECT_THROW(parse_element(q, "1/0"), ParseError);
    EXPECT_THROW(parse_element(q, "1/2/3"), ParseError);
    const FieldDescriptor g4 = FieldDescriptor::binary(2);
    EXPECT_THROW(parse_element(g4, "w^"), ParseError);
    EXPECT_THROW(parse_element(g4, "w+"), ParseError);
    EXPECT_THROW(parse_element(g4, "2"), ParseError);
    EXPECT_THROW(parse_element(FieldDescriptor::prime(7), "1/2"), ParseError);
}

TEST(Fields, IntegerEmbedding) {
    EXPECT_EQ(FieldElement::from_integer(FieldDescriptor::prime(7), -1).residue(), 6);
    EXPECT_EQ(FieldElement::from_integer(FieldDescriptor::binary(3), 5).bit_pattern(), 1u);
    EXPECT_EQ(format_element(FieldElement::from_integer(FieldDescriptor::rational(), -3)), "-3");
}

TEST(Fields, PowHandlesNegativeExponents) {
    const FieldElement two = rational_from(2);
    EXPECT_EQ(format_element(two.pow(-2)), "1/4");
    EXPECT_EQ(format_element(two.pow(0)), "1");
    const FieldDescriptor g8 = FieldDescriptor::binary(3);
    const FieldElement w = parse_element(g8, "w");
    EXPECT_TRUE(w.pow(7).is_one());  // w generates the multiplicative group
    EXPECT_EQ(w.pow(-1) * w, FieldElement::one(g8));
}

TEST(Fields, DescriptorStringRoundTrip) {
    for (const FieldDescriptor& f :
         {FieldDescriptor::rational(), FieldDescriptor::prime(13), FieldDescriptor::binary(3)})
        EXPECT_EQ(FieldDescriptor::from_string(f.to_string()), f);
    EXPECT_THROW(FieldDescriptor::from_string("prime:6"), ParseError);
    EXPECT_THROW(FieldDescriptor::from_string("galois:9"), ParseError);
}
