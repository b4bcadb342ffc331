//! Ei₀ over a polar grid of radii 13..200, against a high-precision series.

use critline::special_fn::ei0;
use critline::Complex64;

const GRID: &[(f64, f64, f64, f64)] = &[
    (13.0, 0.0, 37194.54632566667, 0.0),
    (12.557035741757888, 3.36464758633277, -23711.680937281297, 1557.4495810192122),
    (11.258330249197702, 6.5, 5994.949591106003, -2224.0890258701434),
    (9.192388155425117, 9.192388155425117, -376.85805603183996, 705.2876563595131),
    (6.5, 11.258330249197702, -43.1100003465591, -32.44946410621383),
    (3.36464758633277, 12.557035741757888, -2.7492903546769014, -0.3830394242874019),
    (2.6871417427743184e-42, 13.0, -3.115400896799035, 1.4993617228628247),
    (-3.36464758633277, 12.557035741757888, -3.143029400372665, 1.3065543117434952),
    (-6.5, 11.258330249197702, -3.142270356928748, 1.0472324726709394),
    (-9.192388155425117, 9.192388155425117, -3.14215852942005, 0.7854017628886414),
    (-11.258330249197702, 6.5, -3.1421657305249187, 0.5235981692558509),
    (-12.557035741757888, 3.36464758633277, -3.1421647965788493, 0.26179950202572483),
    (-13.0, 5.374283485548637e-42, -3.1421651845496914, 4.134054875305872e-43),
    (-12.557035741757888, -3.36464758633277, -3.1421647965788493, -0.26179950202572483),
    (-11.258330249197702, -6.5, -3.1421657305249187, -0.5235981692558509),
    (-9.192388155425117, -9.192388155425117, -3.14215852942005, -0.7854017628886414),
    (-6.5, -11.258330249197702, -3.142270356928748, -1.0472324726709394),
    (-3.36464758633277, -12.557035741757888, -3.143029400372665, -1.3065543117434952),
    (2.904039372851485e-40, -13.0, -3.115400896799035, -1.4993617228628247),
    (3.36464758633277, -12.557035741757888, -2.7492903546769014, 0.3830394242874019),
    (6.5, -11.258330249197702, -43.1100003465591, 32.44946410621383),
    (9.192388155425117, -9.192388155425117, -376.85805603183996, -705.2876563595131),
    (11.258330249197702, -6.5, 5994.949591106003, 2224.0890258701434),
    (12.557035741757888, -3.36464758633277, -23711.680937281297, -1557.4495810192122),
    (20.0, 0.0, 25615649.09110865, 0.0),
    (19.318516525781366, 5.176380902050416, 2401313.5506006167, -12701252.421733169),
    (17.320508075688775, 10.0, -1740361.502271777, -39557.57978077539),
    (14.142135623730951, 14.142135623730951, 52466.61141880601, 48972.59390902831),
    (10.0, 17.320508075688775, -981.7272442999773, -556.5521095190984),
    (5.176380902050416, 19.318516525781366, 2.0529762460065633, -5.109539778391221),
    (4.1340642196527976e-42, 20.0, -3.5285281176101706, 1.54824170104344),
    (-5.176380902050416, 19.318516525781366, -3.57290336617058, 1.3087225352553953),
    (-10.0, 17.320508075688775, -3.5729498549079928, 1.047198653520479),
    (-14.142135623730951, 14.142135623730951, -3.5729479145044998, 0.7853981381165329),
    (-17.320508075688775, 10.0, -3.5729479377718807, 0.5235987768671748),
    (-19.318516525781366, 5.176380902050416, -3.572947938583078, 0.26179938794623003),
    (-20.0, 8.268128439305595e-42, -3.572947938553879, 4.134064211131856e-43),
    (-19.318516525781366, -5.176380902050416, -3.572947938583078, -0.26179938794623003),
    (-17.320508075688775, -10.0, -3.5729479377718807, -0.5235987768671748),
    (-14.142135623730951, -14.142135623730951, -3.5729479145044998, -0.7853981381165329),
    (-10.0, -17.320508075688775, -3.5729498549079928, -1.047198653520479),
    (-5.176380902050416, -19.318516525781366, -3.57290336617058, -1.3087225352553953),
    (4.467752881309977e-40, -20.0, -3.5285281176101706, -1.54824170104344),
    (5.176380902050416, -19.318516525781366, 2.0529762460065633, 5.109539778391221),
    (10.0, -17.320508075688775, -981.7272442999773, 556.5521095190984),
    (14.142135623730951, -14.142135623730951, 52466.61141880601, -48972.59390902831),
    (17.320508075688775, -10.0, -1740361.502271777, 39557.57978077539),
    (19.318516525781366, -5.176380902050416, 2401313.5506006167, 12701252.421733169),
    (35.0, 0.0, 46690550144657.46, 0.0),
    (33.80740392011739, 9.058666578588227, -11383991821922.31, 8405340833154.811),
    (30.31088913245535, 17.5, -133546674992.56018, -405956374339.65436),
    (24.748737341529164, 24.748737341529164, 605449664.1420425, -1516303714.5309067),
    (17.5, 30.31088913245535, -658125.8179270824, -947201.1774268515),
    (9.058666578588227, 33.80740392011739, 117.85852626201795, 216.66197345179557),
    (7.234612384392396e-42, 35.0, -4.144043582746249, 1.5969222045083056),
    (-9.058666578588227, 33.80740392011739, -4.132560884689563, 1.3089986114762204),
    (-17.5, 30.31088913245535, -4.1325637270954845, 1.0471975512541676),
    (-24.748737341529164, 24.748737341529164, -4.13256372639141, 0.7853981633972618),
    (-30.31088913245535, 17.5, -4.132563726390948, 0.5235987755983004),
    (-33.80740392011739, 9.058666578588227, -4.132563726390947, 0.26179938779914946),
    (-35.0, 1.4469224768784792e-41, -4.132563726390947, 4.134064219652795e-43),
    (-33.80740392011739, -9.058666578588227, -4.132563726390947, -0.26179938779914946),
    (-30.31088913245535, -17.5, -4.132563726390948, -0.5235987755983004),
    (-24.748737341529164, -24.748737341529164, -4.13256372639141, -0.7853981633972618),
    (-17.5, -30.31088913245535, -4.1325637270954845, -1.0471975512541676),
    (-9.058666578588227, -33.80740392011739, -4.132560884689563, -1.3089986114762204),
    (7.818567542292459e-40, -35.0, -4.144043582746249, -1.5969222045083056),
    (9.058666578588227, -33.80740392011739, 117.85852626201795, -216.66197345179557),
    (17.5, -30.31088913245535, -658125.8179270824, 947201.1774268515),
    (24.748737341529164, -24.748737341529164, 605449664.1420425, 1516303714.5309067),
    (30.31088913245535, -17.5, -133546674992.56018, 405956374339.65436),
    (33.80740392011739, -9.058666578588227, -11383991821922.31, -8405340833154.811),
    (60.0, 0.0, 1.9361822139292765e+24, 0.0),
    (57.955549577344094, 15.529142706151246, -2.2607199247736566e+23, 1.0785813753681378e+23),
    (51.96152422706632, 30.0, -2.2977478028199733e+20, -5.795770466635351e+20),
    (42.42640687119285, 42.42640687119285, -3.1683130214245044e+16, -3.1854057061273864e+16),
    (30.0, 51.96152422706632, 144657457306.751, 106372059191.96321),
    (15.529142706151246, 57.955549577344094, 92536.15046652233, 7569.326458303508),
    (1.2402192658958393e-41, 60.0, -4.676373470501077, 1.5867456162599474),
    (-15.529142706151246, 57.955549577344094, -4.671560224420874, 1.3089969377180823),
    (-30.0, 51.96152422706632, -4.671560227123632, 1.0471975511965972),
    (-42.42640687119285, 42.42640687119285, -4.671560227123633, 0.7853981633974483),
    (-51.96152422706632, 30.0, -4.671560227123633, 0.5235987755982988),
    (-57.955549577344094, 15.529142706151246, -4.671560227123633, 0.26179938779914946),
    (-60.0, 2.4804385317916786e-41, -4.671560227123633, 4.1340642196527976e-43),
    (-57.955549577344094, -15.529142706151246, -4.671560227123633, -0.26179938779914946),
    (-51.96152422706632, -30.0, -4.671560227123633, -0.5235987755982988),
    (-42.42640687119285, -42.42640687119285, -4.671560227123633, -0.7853981633974483),
    (-30.0, -51.96152422706632, -4.671560227123632, -1.0471975511965972),
    (-15.529142706151246, -57.955549577344094, -4.671560224420874, -1.3089969377180823),
    (1.340325864392993e-39, -60.0, -4.676373470501077, -1.5867456162599474),
    (15.529142706151246, -57.955549577344094, 92536.15046652233, -7569.326458303508),
    (30.0, -51.96152422706632, 144657457306.751, -106372059191.96321),
    (42.42640687119285, -42.42640687119285, -3.1683130214245044e+16, 3.1854057061273864e+16),
    (51.96152422706632, -30.0, -2.2977478028199733e+20, 5.795770466635351e+20),
    (57.955549577344094, -15.529142706151246, -2.2607199247736566e+23, -1.0785813753681378e+23),
    (100.0, 0.0, 2.71555274485388e+41, 0.0),
    (96.59258262890683, 25.881904510252078, 7.956669512749174e+39, 4.189951811202588e+39),
    (86.60254037844386, 50.0, 2.8868265817507878e+35, -2.9381897913818677e+35),
    (70.71067811865476, 70.71067811865476, 3.581157667642052e+28, 3.709629440434134e+28),
    (50.0, 86.60254037844386, -3.904893437387476e+19, -3.4494675994052026e+19),
    (25.881904510252078, 96.59258262890683, 903472764.0768758, 1491209865.5800083),
    (2.0670321098263988e-41, 100.0, -5.187534676032235, 1.5622254668890563),
    (-25.881904510252078, 96.59258262890683, -5.182385850889574, 1.3089969389957747),
    (-50.0, 86.60254037844386, -5.182385850889625, 1.0471975511965976),
    (-70.71067811865476, 70.71067811865476, -5.182385850889625, 0.7853981633974483),
    (-86.60254037844386, 50.0, -5.182385850889625, 0.5235987755982989),
    (-96.59258262890683, 25.881904510252078, -5.182385850889625, 0.26179938779914946),
    (-100.0, 4.1340642196527976e-41, -5.182385850889625, 4.1340642196527976e-43),
    (-96.59258262890683, -25.881904510252078, -5.182385850889625, -0.26179938779914946),
    (-86.60254037844386, -50.0, -5.182385850889625, -0.5235987755982989),
    (-70.71067811865476, -70.71067811865476, -5.182385850889625, -0.7853981633974483),
    (-50.0, -86.60254037844386, -5.182385850889625, -1.0471975511965976),
    (-25.881904510252078, -96.59258262890683, -5.182385850889574, -1.3089969389957747),
    (2.2338764406549883e-39, -100.0, -5.187534676032235, -1.5622254668890563),
    (25.881904510252078, -96.59258262890683, 903472764.0768758, -1491209865.5800083),
    (50.0, -86.60254037844386, -3.904893437387476e+19, 3.4494675994052026e+19),
    (70.71067811865476, -70.71067811865476, 3.581157667642052e+28, -3.709629440434134e+28),
    (86.60254037844386, -50.0, 2.8868265817507878e+35, 2.9381897913818677e+35),
    (96.59258262890683, -25.881904510252078, 7.956669512749174e+39, -4.189951811202588e+39),
    (200.0, 0.0, 3.6312352331593567e+84, 0.0),
    (193.18516525781365, 51.763809020504155, 1.312048755105064e+81, 3.761885757506847e+81),
    (173.20508075688772, 100.0, 4.114405145537832e+72, -7.292123070043158e+72),
    (141.4213562373095, 141.4213562373095, -9.719308546632475e+58, 8.861859676335048e+58),
    (100.0, 173.20508075688772, -1.085489694845961e+41, 7.9824218275427575e+40),
    (51.763809020504155, 193.18516525781365, -1.4731151431090186e+20, -3.514037730357062e+19),
    (4.1340642196527976e-41, 200.0, -5.879911477542597, 1.5683823393394698),
    (-51.763809020504155, 193.18516525781365, -5.87553303144957, 1.3089969389957472),
    (-100.0, 173.20508075688772, -5.87553303144957, 1.0471975511965976),
    (-141.4213562373095, 141.4213562373095, -5.87553303144957, 0.7853981633974483),
    (-173.20508075688772, 100.0, -5.87553303144957, 0.5235987755982989),
    (-193.18516525781365, 51.763809020504155, -5.87553303144957, 0.26179938779914946),
    (-200.0, 8.268128439305595e-41, -5.87553303144957, 4.1340642196527976e-43),
    (-193.18516525781365, -51.763809020504155, -5.87553303144957, -0.26179938779914946),
    (-173.20508075688772, -100.0, -5.87553303144957, -0.5235987755982989),
    (-141.4213562373095, -141.4213562373095, -5.87553303144957, -0.7853981633974483),
    (-100.0, -173.20508075688772, -5.87553303144957, -1.0471975511965976),
    (-51.763809020504155, -193.18516525781365, -5.87553303144957, -1.3089969389957472),
    (4.4677528813099766e-39, -200.0, -5.879911477542597, -1.5683823393394698),
    (51.763809020504155, -193.18516525781365, -1.4731151431090186e+20, 3.514037730357062e+19),
    (100.0, -173.20508075688772, -1.085489694845961e+41, -7.9824218275427575e+40),
    (141.4213562373095, -141.4213562373095, -9.719308546632475e+58, -8.861859676335048e+58),
    (173.20508075688772, -100.0, 4.114405145537832e+72, 7.292123070043158e+72),
    (193.18516525781365, -51.763809020504155, 1.312048755105064e+81, -3.761885757506847e+81),
];

#[test]
fn polar_grid_relative_error() {
    let mut worst = 0.0f64;
    for &(x, y, re, im) in GRID {
        let want = Complex64::new(re, im);
        let got = ei0(Complex64::new(x, y));
        let err = (got - want).norm() / want.norm();
        worst = worst.max(err);
        assert!(err <= 1e-10, "ei0({x}+{y}i) = {got}, want {want}, rel {err:e}");
    }
    eprintln!("worst relative error {worst:e}");
}
