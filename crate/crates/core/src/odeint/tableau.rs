//! Dormand-Prince 8(5,3) tableau.

pub(crate) const STAGES: usize = 12;

pub(crate) const A: [[f64; STAGES]; STAGES] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [
        5.260015195876773E-2,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        1.97250569845379E-2,
        5.91751709536137E-2,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        2.958758547680685E-2,
        0.0,
        8.876275643042054E-2,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        2.413651341592667E-1,
        0.0,
        -8.845494793282861E-1,
        9.24834003261792E-1,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        3.7037037037037035E-2,
        0.0,
        0.0,
        1.7082860872947386E-1,
        1.2546768756682242E-1,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        3.7109375E-2,
        0.0,
        0.0,
        1.7025221101954405E-1,
        6.021653898045596E-2,
        -1.7578125E-2,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        3.709200011850479E-2,
        0.0,
        0.0,
        1.7038392571223998E-1,
        1.0726203044637328E-1,
        -1.5319437748624402E-2,
        8.273789163814023E-3,
        0.0,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        6.241109587160757E-1,
        0.0,
        0.0,
        -3.3608926294469414,
        -8.68219346841726E-1,
        2.759209969944671E1,
        2.0154067550477894E1,
        -4.348988418106996E1,
        0.0,
        0.0,
        0.0,
        0.0,
    ],
    [
        4.7766253643826434E-1,
        0.0,
        0.0,
        -2.4881146199716677,
        -5.90290826836843E-1,
        2.1230051448181193E1,
        1.5279233632882423E1,
        -3.328821096898486E1,
        -2.0331201708508627E-2,
        0.0,
        0.0,
        0.0,
    ],
    [
        -9.371424300859873E-1,
        0.0,
        0.0,
        5.186372428844064,
        1.0914373489967295,
        -8.149787010746927,
        -1.852006565999696E1,
        2.2739487099350505E1,
        2.4936055526796523,
        -3.0467644718982196,
        0.0,
        0.0,
    ],
    [
        2.273310147516538,
        0.0,
        0.0,
        -1.053449546673725E1,
        -2.0008720582248625,
        -1.79589318631188E1,
        2.794888452941996E1,
        -2.8589982771350235,
        -8.87285693353063,
        1.2360567175794303E1,
        6.433927460157636E-1,
        0.0,
    ],
];

pub(crate) const C: [f64; STAGES] = [
    0.0,
    5.260015195876773E-2,
    7.89002279381516E-2,
    1.183503419072274E-1,
    2.816496580927726E-1,
    3.333333333333333E-1,
    0.25E+00,
    3.076923076923077E-1,
    6.512820512820513E-1,
    0.6E+00,
    8.571428571428571E-1,
    1.0,
];

pub(crate) const B: [f64; STAGES] = [
    5.4293734116568765E-2,
    0.0,
    0.0,
    0.0,
    0.0,
    4.450312892752409,
    1.8915178993145003,
    -5.801203960010585,
    3.111643669578199E-1,
    -1.521609496625161E-1,
    2.0136540080403034E-1,
    4.471061572777259E-2,
];

pub(crate) const ER: [f64; STAGES] = [
    1.312004499419488E-2,
    0.0,
    0.0,
    0.0,
    0.0,
    -1.2251564463762044,
    -4.957589496572502E-1,
    1.6643771824549864,
    -3.5032884874997366E-1,
    3.341791187130175E-1,
    8.192320648511571E-2,
    -2.2355307863886294E-2,
];

pub(crate) const BHH: [f64; 3] = [
    2.440944881889764E-1,
    7.338466882816118E-1,
    2.2058823529411766E-2,
];
