#![allow(clippy::approx_constant, clippy::excessive_precision)]

//! Reference values computed with mpmath at 50 significant digits.

pub const ERF: &[(f64, f64)] = &[
    (-7.5, -1.0),
    (-5.0, -9.9999999999846254021e-1),
    (-3.2, -9.9999397423884823791e-1),
    (-2.0, -9.9532226501895273416e-1),
    (-1.0, -8.4270079294971486934e-1),
    (-0.5, -5.2049987781304653768e-1),
    (-0.001, -1.1283787909692364034e-3),
    (1e-08, 1.1283791670955125599e-8),
    (0.001, 1.1283787909692364034e-3),
    (0.1, 1.124629160182848984e-1),
    (0.25, 2.7632639016823693299e-1),
    (0.5, 5.2049987781304653768e-1),
    (0.84375, 7.6722566123234163346e-1),
    (1.0, 8.4270079294971486934e-1),
    (1.25, 9.2290012825645823014e-1),
    (1.5, 9.6610514647531072707e-1),
    (1.99, 9.9511141319961699705e-1),
    (2.0, 9.9532226501895273416e-1),
    (2.01, 9.9552484935524823708e-1),
    (2.5, 9.9959304798255504106e-1),
    (2.857, 9.9994664173991315363e-1),
    (3.0, 9.9997790950300141456e-1),
    (4.0, 9.9999998458274209972e-1),
    (5.0, 9.9999999999846254021e-1),
    (5.99, 9.999999999999999757e-1),
    (6.0, 9.9999999999999997848e-1),
];

pub const ERFC: &[(f64, f64)] = &[
    (-6.0, 1.9999999999999999785),
    (-3.0, 1.9999779095030014146),
    (-1.5, 1.9661051464753107271),
    (-0.2, 1.2227025892104784662),
    (0.0, 1.0),
    (0.1, 8.875370839817151016e-1),
    (0.5, 4.7950012218695346232e-1),
    (1.0, 1.5729920705028513066e-1),
    (1.5, 3.3894853524689272933e-2),
    (1.9, 7.2095707647425327628e-3),
    (2.0, 4.6777349810472658379e-3),
    (2.1, 2.9794666563329842857e-3),
    (2.5, 4.0695201744495893956e-4),
    (3.0, 2.2090496998585441373e-5),
    (4.0, 1.5417257900280018852e-8),
    (5.0, 1.5374597944280348502e-12),
    (7.5, 2.7766493860305691007e-26),
    (10.0, 2.088487583762544757e-45),
    (15.0, 7.2129941724512066666e-100),
    (20.0, 5.3958656116079009289e-176),
    (25.0, 8.300172571196522752e-274),
    (26.0, 5.6631924088561428465e-296),
];

pub const ERFCX: &[(f64, f64)] = &[
    (0.0, 1.0),
    (0.01, 9.8881546104634251033e-1),
    (0.5, 6.1569034419292587487e-1),
    (1.0, 4.2758357615580700441e-1),
    (1.9999, 2.5540635637473407887e-1),
    (2.0, 2.5539567631050574387e-1),
    (3.0, 1.7900115118138995042e-1),
    (5.0, 1.1070463773306862637e-1),
    (10.0, 5.6140992743822585858e-2),
    (30.0, 1.8795888861416751497e-2),
    (100.0, 5.6416137829894329036e-3),
    (1000.0, 5.641893014533876542e-4),
    (100000.0, 5.6418958351954680777e-6),
    (100000000.0, 5.6418958354775625874e-9),
    (-0.5, 1.9523604891825570933),
    (-2.0, 1.0894090438997797241e+2),
    (-5.0, 1.4400979867466104041e+11),
];

pub const Q: &[(f64, f64)] = &[
    (0.0, 5.0e-1),
    (0.5, 3.0853753872598689636e-1),
    (1.0, 1.5865525393145705141e-1),
    (1.4142135623730951, 7.8649603525142551141e-2),
    (2.0, 2.27501319481792072e-2),
    (3.0, 1.3498980316300945267e-3),
    (5.0, 2.8665157187919391167e-7),
    (8.0, 6.2209605742717841235e-16),
];
