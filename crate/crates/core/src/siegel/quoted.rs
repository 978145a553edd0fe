//! Coefficient tables as printed, keyed by the `(Δu, Δv)` shift of the
//! Poincaré series. `D` is `det τ`. Which entries are typo suspects is
//! configuration (see `report::suspects`), not part of the tables.

pub struct QuotedTerm {
    pub shift_uv: (i32, i32),
    pub text: &'static str,
}

/// A printed display; `id` prefixes the per-coefficient check ids.
pub struct QuotedTable {
    pub id: &'static str,
    pub terms: &'static [QuotedTerm],
}

impl QuotedTable {
    pub fn check_id(&self, shift_uv: (i32, i32)) -> String {
        format!("{}.shift_{}_{}", self.id, shift_uv.0, shift_uv.1)
    }
}

const fn t(shift_uv: (i32, i32), text: &'static str) -> QuotedTerm {
    QuotedTerm { shift_uv, text }
}

pub const C1_ON_P: QuotedTable = QuotedTable {
    id: "calc.C1",
    terms: &[
    t((0, 0), "4*(s1^2+2*s1*s2+2*s2^2+2*s1+5*s2+8)"),
    t((0, 2), "-16*pi*(s1+s2)"),
    t((2, 0), "-8*D*s1*(s1-1)"),
    t((2, 2), "32*pi*D*s1"),
],
};

pub const C2_ON_P: QuotedTable = QuotedTable {
    id: "calc.C2",
    terms: &[
    t(
        (0, 0),
        "4*(4*s1^4+16*s1^3*s2+24*s1^3+24*s1^2*s2^2+72*s1^2*s2+57*s1^2+16*s1*s2^3\
         +72*s1*s2^2+114*s1*s2+46*s1+8*s2^4+40*s2^3+84*s2^2+51*s2+26)",
    ),
    t((2, 4), "-256*pi^2*D*(s1+s1)*(4*s1+2*s2+1)"),
    t((2, 2), "32*pi*D*s1*(16*s1^2+36*s1*s2+30*s1+24*s2^2+40*s2+13)"),
    t((2, 0), "-8*D*s1*(s1-1)*(8*s1^2+24*s1*s2+28*s1+24*s2^2+60*s2+43)"),
    t((4, 4), "512*pi^2*D^2*s1*(s1-1)"),
    t((4, 2), "-256*pi*D^2*s1*(s1-1)*(s1-2)"),
    t((4, 0), "32*D^2*s1*(s1-1)*(s1-2)*(s1-3)"),
    t((0, 2), "-16*pi*(s1+s2)*(8*(s1+s2)*(s1+s2+4)+37)"),
    t((0, 4), "256*pi^2*(s1+s2)*(s1+s2+1)"),
],
};

pub const D_PLUS_ON_P: QuotedTable = QuotedTable {
    id: "calc.Dplus",
    terms: &[
    t((4, 0), "16*D^2*s1*(s1-1)*(s1-2)*(s1-3)"),
    t((4, 2), "-128*pi*D^2*s1*(s1-1)*(s1-2)"),
    t((4, 4), "256*pi^2*D^2*s1*(s1-1)"),
    t((2, 0), "8*D*s1*(s1-1)*(u+1)*(v+1)"),
    t((2, 2), "-182*D*s1*(s1*s2+5/6*s1+4/3*s2^3+2/3*s2-2)"),
    t((2, 4), "64*pi^2*D*(v-u-3)*(u-3)"),
],
};

pub const D_MINUS_ON_P: QuotedTable = QuotedTable {
    id: "calc.Dminus",
    terms: &[
    t((0, 4), "512*pi^2*(s1+s2)*(s1+s2+1)"),
    t((0, 2), "64*pi*(s1+s2)*(u-1)*(v+1)"),
    t((2, 2), "128*pi*D*s1*(s1-3)*(v+1)"),
    t((2, 4), "-1024*pi^2*D*(s1+s2)^2"),
],
};

/// On the line `v = 2u+1`, in terms of `u`.
pub const D_PLUS_2_REMAINDER_ON_LINE: QuotedTable = QuotedTable {
    id: "calc.line.Dplus2_remainder",
    terms: &[t((2, 4), "64*pi^2*D*(u-2)*(u-3)")],
};

pub const D_MINUS_ON_LINE: QuotedTable = QuotedTable {
    id: "calc.line.Dminus",
    terms: &[
    t((0, 4), "128*pi^2*u*(u-2)"),
    t((0, 2), "64*pi*(u-2)*(u-1)*(u+1)"),
    t((2, 4), "-256*D*(u-2)^2"),
],
};

/// `C1` on `s1 = 0`, in terms of `s2` and `u`.
pub const C1_ON_S1_ZERO: QuotedTable = QuotedTable {
    id: "calc.line.C1_s1_0",
    terms: &[t((0, 0), "4*(2*s2^2+5*s2+8)"), t((0, 2), "-8*pi*(u-2)")],
};

/// `C1` on `s1 = 1`.
pub const C1_ON_S1_ONE: QuotedTable = QuotedTable {
    id: "calc.line.C1_s1_1",
    terms: &[t((0, 0), "4*(2*s2^2+7*s2+11)"), t((0, 2), "-8*pi*u"), t((2, 2), "32*pi*D")],
};

/// Genus one, weight two: `C1 h(s) = 4(s²−¼) h(s) − 16πτ(s−½) h(s+1)`, keyed by the power shift of `y`.
pub const GENUS1_C1: QuotedTable = QuotedTable {
    id: "calc.genus1.C1",
    terms: &[t((0, 0), "4*(s^2-1/4)"), t((0, 1), "-16*pi*tau11*(s-1/2)")],
};

/// Printed limit relations, with `X = Λ2²` at `Λ1 = 2`: `X − r` multiplies
/// the lower limit on the line `s1 = 0` (resp. `s1 = 1`).
pub const RELATION_S1_ZERO_ROOT: i64 = 9;
pub const RELATION_S1_ONE_ROOT: i64 = 45;

/// Printed left side of the limit equation, `c (X − r1)(X − r2)` once
/// divided by the product of the two relation coefficients.
pub const LIMIT_DISPLAY: (i64, i64, i64) = (2, 9, 45);
