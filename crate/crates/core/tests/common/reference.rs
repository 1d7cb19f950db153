#![allow(clippy::approx_constant)]

// mpmath at 40 digits
pub const LN_GAMMA: &[(f64, f64)] = &[
    (1e-06, 13.815509980749432),
    (1.5973122800602543e-06, 13.347187244177304),
    (2.5514065200312883e-06, 12.878864301667019),
    (4.075392965871776e-06, 12.410541030211077),
    (6.509675230458169e-06, 11.942217233331014),
    (1.03979841848149e-05, 11.473892597196846),
    (1.6608827826277153e-05, 11.00556662054316),
    (2.652948464431896e-05, 10.537238502741218),
    (4.2375871606040625e-05, 10.068906965061062),
    (6.768750009458535e-05, 9.600569965288399),
    (0.0001081180751076608, 9.13222424217741),
    (0.0001726983290659435, 8.663864588561824),
    (0.00027585316176291833, 8.195482692230495),
    (0.00044062364277735723, 7.727065289402193),
    (0.0007038135554931555, 7.258591227891599),
    (0.0011242100350620865, 6.790026808295018),
    (0.00179571449437164, 6.321318424504128),
    (0.002868316813342011, 5.852381017243468),
    (0.004581597669054491, 5.383080161722203),
    (0.007318242219076176, 4.913204802124899),
    (0.011689518164985781, 4.4424270999156406),
    (0.0186718109129192, 3.970246834647961),
    (0.029824712862168905, 3.495923821859441),
    (0.04763938010401341, 3.018421971139189),
    (0.07609496685459878, 2.5364444198729954),
    (0.12154742500762866, 2.048777164524046),
    (0.19414919457438812, 1.5554671393528874),
    (0.3101168926574778, 1.060977324410669),
    (0.4953535208959171, 0.5815419051220145),
    (0.5, 0.5723649429247001),
    (0.7912342618981322, 0.16060753557384888),
    (0.999, 0.0005780385328913802),
    (1.0, 0.0),
    (1.001, -0.0005763935982833062),
    (1.263848202934298, -0.10130743502656038),
    (1.5, -0.12078223763524522),
    (1.9999, -4.227520877215346e-05),
    (2.0, 0.0),
    (2.0001, 4.2281658112919945e-05),
    (2.0187602546790386, 0.008044590986658788),
    (2.5, 0.2846828704729192),
    (3.0, 0.6931471805599453),
    (3.2245905452963948, 0.9100772487634029),
    (5.1506780761681235, 3.4074778215354424),
    (7.25, 7.0521854507385395),
    (8.22724134170047, 8.986601838383459),
    (13.141473626117563, 20.34537333659672),
    (14.9, 24.924132002217277),
    (15.1, 25.458999750992664),
    (20.991037201085543, 42.30854607080329),
    (33.3, 82.60372358165495),
    (33.52924149249557, 83.40468267192355),
    (53.55666917706898, 158.5686481047663),
    (85.5467253556568, 293.7514027124371),
    (136.64483492953255, 533.7512980663807),
    (218.26447283974872, 955.4706033293111),
    (348.6365227678085, 1690.2842674661506),
    (556.881399094527, 2961.6769013361977),
    (889.5134973108234, 5148.406982192009),
    (1420.8308325339221, 8890.265520462483),
    (2269.5105366946686, 15264.777724195028),
    (3625.117049988533, 26081.86511991017),
    (5790.443980602487, 44374.34261942916),
    (9249.147277217333, 75213.06963822505),
    (14773.776525985111, 127059.59446292424),
    (23598.334667821942, 214007.56329001792),
    (37693.909753883614, 359492.0349312734),
    (60208.944933361294, 602420.6030371794),
    (96172.48711152963, 1007296.0600086724),
    (153617.49466718282, 1680911.5225272742),
    (245375.11066398176, 2799858.0589034418),
    (391940.67748472193, 4655805.178863875),
    (626051.657201482, 7729971.858553135),
    (1000000.0, 12815504.569147611),
];
pub const DIGAMMA: &[(f64, f64)] = &[
    (-3.7, -0.8450768588704194),
    (-1.2, 4.868324766627196),
    (-0.5, 0.03648997397857652),
    (0.001, -1000.5755719318103),
    (0.001701254279852589, -588.3760279150235),
    (0.0028942661247167508, -346.08319429037033),
    (0.004923882631706739, -203.66090730790745),
    (0.00837677640068292, -119.9411843091392),
    (0.014251026703029981, -70.72439757013129),
    (0.024244620170823284, -41.78429018896819),
    (0.041246263829013516, -24.755960393103667),
    (0.07017038286703828, -14.718385069161721),
    (0.11937766417144365, -8.77310145178623),
    (0.20309176209047358, -5.209011147824124),
    (0.3, -3.502524222200133),
    (0.34551072945922195, -3.01304093205607),
    (0.5878016072274913, -1.5857310009289078),
    (1.0, -0.5772156649015329),
    (1.4616321449683622, -9.241265521729427e-17),
    (1.701254279852589, 0.20954233594124455),
    (2.8942661247167507, 0.8801407908159031),
    (4.923882631706739, 1.4891282122851695),
    (8.37677640068292, 2.0645884262331684),
    (14.25102670302998, 2.6213336400357146),
    (24.244620170823286, 3.167429865140487),
    (41.24626382901352, 3.7073892441623055),
    (70.17038286703828, 4.243783888206132),
    (119.37766417144366, 4.778097880527187),
    (203.09176209047357, 5.3111939452133665),
    (345.5107294592219, 5.843575866473796),
    (587.8016072274913, 6.375538619962503),
    (1000.0, 6.907255195648812),
    (1701.254279852589, 7.4388271400768975),
    (2894.2661247167507, 7.970314095051136),
    (4923.88263170674, 8.501751101736705),
    (8376.776400682918, 9.0331587517262),
    (14251.026703029982, 9.564549146835049),
    (24244.620170823284, 10.095929399854054),
    (41246.26382901352, 10.627303691459604),
    (70170.38286703828, 11.15867447897933),
    (119377.66417144366, 11.690043206806491),
    (203091.76209047358, 12.221410723948138),
    (345510.72945922194, 12.752777529448647),
    (587801.6072274913, 13.28414391664596),
    (1000000.0, 13.815510057964191),
];
/// (m, x, ψ^(m)(x))
pub const POLYGAMMA: &[(usize, f64, f64)] = &[
    (1, 0.01, 10001.621213528313),
    (1, 0.3, 12.245364546107732),
    (1, 1.0, 1.6449340668482264),
    (1, 2.5, 0.49035775610023485),
    (1, 7.7, 0.13866710857111123),
    (1, 19.5, 0.05261944121365593),
    (1, 20.5, 0.04998959242996099),
    (1, 150.0, 0.006688938271165994),
    (1, -0.5, 8.934802200544679),
    (1, -2.3, 14.725912160961292),
    (2, 0.01, -2000002.340398677),
    (2, 0.3, -75.27253658872604),
    (2, 1.0, -2.4041138063191885),
    (2, 2.5, -0.2362040516417274),
    (2, 7.7, -0.01919812143532196),
    (2, 19.5, -0.002768167852746702),
    (2, 20.5, -0.0024984397723677343),
    (2, 150.0, -4.4741728380430464e-05),
    (2, -0.5, -0.82879664423432),
    (2, -2.3, 68.71379252927031),
    (3, 0.01, 600000006.2510618),
    (3, 0.3, 743.1417646550498),
    (3, 1.0, 6.493939402266829),
    (3, 2.5, 0.22390584881725206),
    (3, 7.7, 0.00530753436804149),
    (3, 19.5, 0.00029118480883598755),
    (3, 20.5, 0.0002496881810853771),
    (3, 150.0, 5.985448553818363e-07),
    (3, -0.5, 193.40909103400244),
    (3, -2.3, 768.9350646661422),
    (4, 0.01, -240000000023.7009),
    (4, 0.3, -9883.46855549699),
    (4, 1.0, -24.88626612344088),
    (4, 2.5, -0.3137559995067314),
    (4, 7.7, -0.002197581665824204),
    (4, 19.5, -4.593424189983013e-05),
    (4, 20.5, -3.742211313047414e-05),
    (4, 150.0, -1.2010754430851036e-08),
    (4, -0.5, -3.4742498266672253),
    (4, -2.3, 9738.671736569251),
    (5, 0.01, 120000000000115.05),
    (5, 0.3, 164634.84609922304),
    (5, 1.0, 122.0811674381339),
    (5, 2.5, 0.5785691785671835),
    (5, 7.7, 0.00121135622760719),
    (5, 19.5, 9.65925476058735e-06),
    (5, 20.5, 7.476657640239659e-06),
    (5, 150.0, 3.213519875695133e-10),
    (5, -0.5, 15371.113548602436),
    (5, -2.3, 165660.05361165272),
    (6, 0.01, -7.2000000000000664e+16),
    (6, 0.3, -3292298.1329083703),
    (6, 1.0, -726.0114797149845),
    (6, 2.5, -1.318006107550035),
    (6, 7.7, -0.0008334020992841454),
    (6, 19.5, -2.5384079770104606e-06),
    (6, 20.5, -1.8668396322880944e-06),
    (6, 150.0, -1.0747317699531586e-11),
    (6, -0.5, -43.457923803023284),
    (6, -2.3, 3283536.8849092815),
    (7, 0.01, 5.04e+19),
    (7, 0.3, 76818182.99849322),
    (7, 1.0, 5060.54987523764),
    (7, 2.5, 3.565236352523131),
    (7, 7.7, 0.0006870291280425226),
    (7, 19.5, 8.003159140900626e-07),
    (7, 20.5, 5.592400980358798e-07),
    (7, 150.0, 4.313192199018451e-13),
    (7, -0.5, 2580680.218185598),
    (7, -2.3, 76905683.92058922),
    (8, 0.01, -4.031999999999999e+22),
    (8, 0.3, -2048472046.8178866),
    (8, 1.0, -40400.97839874763),
    (8, 2.5, -11.146030731869933),
    (8, 7.7, -0.0006597973724094734),
    (8, 19.5, -2.943130595087965e-07),
    (8, 20.5, -1.9541016061477283e-07),
    (8, 150.0, -2.0194946440630735e-14),
    (8, -0.5, -1059.9617600414265),
    (8, -2.3, 2047472533.0226316),
];
