//! High-precision reference values (mpmath, 40 digits, rounded to 20).

#![allow(dead_code, clippy::excessive_precision)]

/// `(x, Q(x))`
pub const Q: &[(f64, f64)] = &[
    (-8.0, 0.9999999999999993779),
    (-3.5, 0.99976737092096447496),
    (-1.0, 0.84134474606854294859),
    (0.0, 0.5),
    (0.5, 0.30853753872598689636),
    (1.7, 0.044565462758543039487),
    (2.8284271247461903, 0.0023388674905236314401),
    (5.0, 2.8665157187919391167e-7),
    (8.0, 6.2209605742717841235e-16),
    (12.0, 1.7764821120776789977e-33),
    (20.0, 2.7536241186062336951e-89),
    (37.0, 5.7255712225245768227e-300),
];

/// `(p, erf_inv(p))`
pub const ERF_INV: &[(f64, f64)] = &[
    (0.1, 0.088855990494257691974),
    (0.5, 0.47693627620446987338),
    (0.9, 1.1630871536766741628),
    (0.9999, 2.7510639057120796917),
    (0.998046875, 2.1900999683537676382),
    (-0.75, -0.81341984759761854169),
    (1e-10, 8.8622692545275804594e-11),
    (0.999999999999, 5.0420318985726961301),
];

/// `(k, erf_inv(1 - 2^-k))`
pub const ERF_INV_TAIL: &[(i32, f64)] = &[
    (10, 2.3314677736219476723),
    (20, 3.4655050258033307173),
    (30, 4.3280282758009464554),
    (40, 5.0512540852493899671),
    (50, 5.6861284413103909801),
];

/// `(x, Γ(x), ln Γ(x))`
pub const GAMMA: &[(f64, f64, f64)] = &[
    (0.5, 1.7724538509055160273, 0.57236494292470008707),
    (1.0, 1.0, 0.0),
    (1.02, 0.98884420326391325929, -0.011218489329770096189),
    (2.5, 1.3293403881791370205, 0.28468287047291915963),
    (7.25, 1155.3810139199896872, 7.0521854507385394449),
    (10.0, 362880.0, 12.801827480081469611),
    (20.5, 540624298233507504.47, 40.83150097453079811),
    (33.3, 7.4875775965226323274e+35, 82.603723581654943008),
    (50.0, 6.0828186403426756087e+62, 144.56574394634488601),
];

/// `(n, x, ψ_n(x))`
pub const POLYGAMMA: &[(usize, f64, f64)] = &[
    (0, 0.5, -1.9635100260214234794),
    (0, 1.0, -0.57721566490153286061),
    (0, 2.0, 0.42278433509846713939),
    (0, 3.7, 1.1671535393615114409),
    (0, 10.0, 2.2517525890667211076),
    (0, 50.0, 3.901989673427892197),
    (1, 0.5, 4.9348022005446793094),
    (1, 1.0, 1.6449340668482264365),
    (1, 2.0, 0.64493406684822643647),
    (1, 3.7, 0.31003785767003830216),
    (1, 10.0, 0.10516633568168574612),
    (1, 50.0, 0.020201333226697125806),
    (2, 0.5, -16.828796644234319996),
    (2, 1.0, -2.4041138063191885708),
    (2, 2.0, -0.4041138063191885708),
    (2, 3.7, -0.095395308728554033483),
    (2, 10.0, -0.011049834970802067462),
    (2, 50.0, -0.00040807998933759693141),
    (3, 0.5, 97.409091034002437236),
    (3, 1.0, 6.4939394022668291491),
    (3, 2.0, 0.4939394022668291491),
    (3, 3.7, 0.058279217956563614119),
    (3, 10.0, 0.0023199013042898683856),
    (3, 50.0, 1.6486398720682053084e-5),
    (5, 0.5, 7691.1135486024354962),
    (5, 1.0, 122.08116743813389677),
    (5, 2.0, 2.0811674381338967657),
    (5, 3.7, 0.063939753902039787433),
    (5, 10.0, 0.00030594516211726820905),
    (5, 50.0, 8.0716771352543619173e-8),
    (8, 0.5, -20644899.961760041426),
    (8, 1.0, -40400.978398747634885),
    (8, 2.0, -80.978398747634885328),
    (8, 3.7, -0.35476306402938856628),
    (8, 10.0, -7.3530517935548383886e-5),
    (8, 50.0, -1.3965535085443277128e-10),
    (12, 0.5, -3923983571677.6094268),
    (12, 1.0, -479060379.88983145243),
    (12, 2.0, -58779.889831452426877),
    (12, 3.7, -20.625070900004767927),
    (12, 10.0, -6.888529381558792892e-5),
    (12, 50.0, -1.8396812704116732978e-13),
    (16, 0.5, -2742391937439321116.0),
    (16, 1.0, -20922949679481.510907),
    (16, 2.0, -159791481.51090663166),
    (16, 3.7, -4665.108389620125111),
    (16, 10.0, -0.00026348282818972038534),
    (16, 50.0, -1.0018695347069273999e-15),
];
