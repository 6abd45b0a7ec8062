// Generated by generate_oracles.py (mpmath, 50 digits). Do not edit.
#pragma once
#include <array>
#include <complex>
namespace oracle {
struct Hyp { double a, z, value; bool tiny; };
inline constexpr std::array<Hyp, 168> kHyp1f1HalfB = {{
  {0.5, -1e-3, 0.99900049983337499167, false},
  {0.5, -0.5, 0.60653065971263342360, false},
  {0.5, -2, 0.13533528323661269189, false},
  {0.5, -10, 0.000045399929762484851536, false},
  {0.5, -15.6, 1.6788275299956625583e-7, false},
  {0.5, -50, 1.9287498479639177830e-22, false},
  {0.5, -100, 3.7200759760208359630e-44, false},
  {0.5, -400, 1.9151695967140056950e-174, false},
  {0.5, -1e3, 0.0, true},
  {0.5, -1e4, 0.0, true},
  {0.5, -1e5, 0.0, true},
  {0.5, -1e6, 0.0, true},
  {0.75, -1e-3, 0.99850087467925258603, false},
  {0.75, -0.5, 0.43349593152856413244, false},
  {0.75, -2, -0.11736263172028536730, false},
  {0.75, -10, -0.072109199006443695373, false},
  {0.75, -15.6, -0.049277805611925486978, false},
  {0.75, -50, -0.019606780459703356123, false},
  {0.75, -100, -0.011544245777269838669, false},
  {0.75, -400, -0.0040523586807786363455, false},
  {0.75, -1e3, -0.0020353491169649127038, false},
  {0.75, -1e4, -0.00036163617804703388834, false},
  {0.75, -1e5, -0.000064303590194736823239, false},
  {0.75, -1e6, -0.000011434878559701235614, false},
  {1, -1e-3, 0.99800133280015234710, false},
  {1, -0.5, 0.27522154099292366818, false},
  {1, -2, -0.27997614913081785136, false},
  {1, -10, -0.060751619858032896950, false},
  {1, -15.6, -0.035791611575196922020, false},
  {1, -50, -0.010316156491859887206, false},
  {1, -100, -0.0050769437519705606550, false},
  {1, -400, -0.0012547170561468778798, false},
  {1, -1e3, -0.00050075188159219473560, false},
  {1, -1e4, -0.000050007501875656545475, false},
  {1, -1e5, -5.0000750018750656280e-6, false},
  {1, -1e6, -5.0000075000187500656e-7, false},
  {1.25, -1e-3, 0.99750187418774659424, false},
  {1.25, -0.5, 0.13096235723919879067, false},
  {1.25, -2, -0.37093451745617643156, false},
  {1.25, -10, -0.028172317907245853851, false},
  {1.25, -15.6, -0.013951130468289213644, false},
  {1.25, -50, -0.0028864617183860013470, false},
  {1.25, -100, -0.0011856396885481143712, false},
  {1.25, -400, -0.00020609486441561620748, false},
  {1.25, -1e3, -0.000065344200850156140327, false},
  {1.25, -1e4, -3.6673313043814248813e-6, false},
  {1.25, -1e5, -2.0618858825166860756e-7, false},
  {1.25, -1e6, -1.1594608119540466054e-8, false},
  {1.5, -1e-3, 0.99700249883370824168, false},
  {1.5, -0.5, 0.0, true},
  {1.5, -2, -0.40600584970983807568, false},
  {1.5, -10, -0.00086259866548721217918, false},
  {1.5, -15.6, -5.0700591405869009261e-6, false},
  {1.5, -50, -1.9094623494842786052e-20, false},
  {1.5, -100, -7.4029511922814635663e-42, false},
  {1.5, -400, -1.5302205077744905503e-171, false},
  {1.5, -1e3, 0.0, true},
  {1.5, -1e4, 0.0, true},
  {1.5, -1e5, 0.0, true},
  {1.5, -1e6, 0.0, true},
  {2, -1e-3, 0.99600399786742836830, false},
  {2, -0.5, -0.22477845900707633182, false},
  {2, -2, -0.36001192543459107432, false},
  {2, -10, 0.016388768793279624077, false},
  {2, -15.6, 0.0046617232102766004757, false},
  {2, -50, 0.00033358985520452947080, false},
  {2, -100, 0.000078959569100224514387, false},
  {2, -400, 4.7468745308350995404e-6, false},
  {2, -1e3, 7.5376980644349979884e-7, false},
  {2, -1e4, 7.5037519699320627434e-9, false},
  {2, -1e5, 7.5003750196886813312e-11, false},
  {2, -1e6, 7.5000375001968761813e-13, false},
  {2.5, -1e-3, 0.99500582983470793620, false},
  {2.5, -0.5, -0.40435377314175561574, false},
  {2.5, -2, -0.22555880539435448649, false},
  {2.5, -10, 0.0042827267075944043282, false},
  {2.5, -15.6, 0.000044166594659125890584, false},
  {2.5, -50, 6.0453449401349063046e-19, false},
  {2.5, -100, 4.8116702699178832624e-40, false},
  {2.5, -400, 4.0550715778050885316e-169, false},
  {2.5, -1e3, 0.0, true},
  {2.5, -1e4, 0.0, true},
  {2.5, -1e5, 0.0, true},
  {2.5, -1e6, 0.0, true},
  {3, -1e-3, 0.99400799466895167001, false},
  {3, -0.5, -0.54358384425530724886, false},
  {3, -2, -0.060026832227829917215, false},
  {3, -10, -0.0076997836846341055362, false},
  {3, -15.6, -0.0013597167407757413630, false},
  {3, -50, -0.000018846764610394791844, false},
  {3, -100, -2.0913951079123279525e-6, false},
  {3, -400, -3.0083627900074040548e-8, false},
  {3, -1e3, -1.8948663277230700311e-9, false},
  {3, -1e4, -1.8769705235008040280e-12, false},
  {3, -1e5, -1.8751968927203743771e-15, false},
  {3, -1e6, -1.8750196876771891242e-18, false},
  {5, -1e-3, 0.99001998134399573463, false},
  {5, -0.5, -0.78201509596926598253, false},
  {5, -2, 0.36874409939434295802, false},
  {5, -10, 0.0080545805995435059439, false},
  {5, -15.6, -0.00021345881471807974716, false},
  {5, -50, -1.7753545989570729476e-7, false},
  {5, -100, -3.9569982198599481564e-9, false},
  {5, -400, -3.0922872774670984761e-12, false},
  {5, -1e3, -3.0359477433384403602e-14, false},
  {5, -1e4, -2.9612619576432381206e-19, false},
  {5, -1e5, -2.9539372677640460695e-24, false},
  {5, -1e6, -2.9532062125211409950e-29, false},
  {8, -1e-3, 0.98404793605025890580, false},
  {8, -0.5, -0.55268539767543088661, false},
  {8, -2, 0.023641573282309146358, false},
  {8, -10, -0.0045687091182500525668, false},
  {8, -15.6, 0.00020412135967004202280, false},
  {8, -50, 1.1352780453441230972e-9, false},
  {8, -100, 1.6772483202144178961e-12, false},
  {8, -400, 1.4376316359962722427e-17, false},
  {8, -1e3, 8.4803446297929512779e-21, false},
  {8, -1e4, 7.9721402441820468131e-29, false},
  {8, -1e5, 7.9234529939940328183e-37, false},
  {8, -1e6, 7.9186048577842496921e-45, false},
  {12, -1e-3, 0.97610380607451883172, false},
  {12, -0.5, 0.099090078610725539830, false},
  {12, -2, -0.36429442468659341189, false},
  {12, -10, -0.0032208735736205000043, false},
  {12, -15.6, 0.00042291426892230087056, false},
  {12, -50, 3.5866997038801643220e-11, false},
  {12, -100, 4.4413428019652684662e-16, false},
  {12, -400, 6.7808118649825631848e-24, false},
  {12, -1e3, 8.9875643379567178821e-29, false},
  {12, -1e4, 7.8373916747117487119e-41, false},
  {12, -1e5, 7.7321511466027883943e-53, false},
  {12, -1e6, 7.7217183229784505484e-65, false},
  {16, -1e-3, 0.96818089872343723552, false},
  {16, -0.5, 0.60787137290819481363, false},
  {16, -2, 0.062909831310637344093, false},
  {16, -10, 0.0053272438084067835075, false},
  {16, -15.6, 0.000070393688908736948953, false},
  {16, -50, -1.9676901752345209963e-11, false},
  {16, -100, 7.8467629586254108869e-19, false},
  {16, -400, 1.3589472131881805289e-29, false},
  {16, -1e3, 3.8302117293052127635e-36, false},
  {16, -1e4, 3.0066088074424023694e-52, false},
  {16, -1e5, 2.9358848751213492207e-68, false},
  {16, -1e6, 2.9289162106045308310e-84, false},
  {19, -1e-3, 0.96225262511352805786, false},
  {19, -0.5, 0.76938041492831367943, false},
  {19, -2, 0.34490372830211501071, false},
  {19, -10, -0.00043750462955168051175, false},
  {19, -15.6, 2.2685542143184561178e-6, false},
  {19, -50, -1.8151998901659295278e-11, false},
  {19, -100, -2.1074480520228944271e-20, false},
  {19, -400, -1.5105096109276306665e-33, false},
  {19, -1e3, -2.2828658210394382336e-41, false},
  {19, -1e4, -1.6233363329552144327e-60, false},
  {19, -1e5, -1.5699845995567670302e-79, false},
  {19, -1e6, -1.5647570705369633298e-98, false},
  {20, -1e-3, 0.96027918001456180086, false},
  {20, -0.5, 0.78002902223948872615, false},
  {20, -2, 0.36979487687825003283, false},
  {20, -10, -0.0049996504852526664023, false},
  {20, -15.6, -0.00034660971118713880890, false},
  {20, -50, 7.0851887211462424282e-12, false},
  {20, -100, 7.9034993779679995745e-21, false},
  {20, -400, 8.1966748060321200779e-35, false},
  {20, -1e3, 4.6367232639523999167e-43, false},
  {20, -1e4, 3.1780723193805593376e-63, false},
  {20, -1e5, 3.0626798532997619098e-83, false},
  {20, -1e6, 3.0513968189725525270e-103, false},
}};
struct CPoint { double re, im; double vre, vim; };
inline constexpr std::array<CPoint, 14> kZeta = {{
  {2.0, 0.0, 1.6449340668482264365, 0.0},
  {0.5, 14.0, 0.022241142609993589246, -0.10325812326645005790},
  {0.5, 100.0, 2.6926198856813240905, -0.020386029602598161771},
  {0.5, 149.0, 1.6335653779178484885, -1.5475759713231928787},
  {0.5, 240.0, 0.90147043093331429599, 0.56775098752269755925},
  {-0.25, 30.0, -2.2584534885534526552, -0.53210938486078977130},
  {-3.0, 60.0, 1661.8639025166421310, 1922.1688986377260025},
  {3.0, -20.0, 0.98826148470410569332, 0.13204479027108086230},
  {0.1, 0.1, -0.58945330674369925457, -0.11391020769279222294},
  {1.5, 150.0, 0.64316428675654627031, -0.13865270836938080802},
  {-0.6, 0.0, -0.17459571193801338553, 0.0},
  {-0.9, 0.0, -0.10119350398535188216, 0.0},
  {-1.5, 0.0, -0.025485201889833035950, 0.0},
  {-1.5, 7.0, 0.81617677283656677350, 1.0196443720204429417},
}};
inline constexpr std::array<CPoint, 14> kZetaPrime = {{
  {2.0, 0.0, -0.93754825431584375370, 0.0},
  {0.5, 14.0, 0.74823369612008626253, 0.20443653378499741947},
  {0.5, 100.0, -3.7273127096446482387, -0.19422870257374323338},
  {0.5, 149.0, -1.5924950511562120022, 3.4985612812239950268},
  {0.5, 240.0, -0.78847109937150835322, -2.3891910347880339457},
  {-0.25, 30.0, 4.7841792245839379460, -0.44800046358173066634},
  {-3.0, 60.0, -3671.6095873827899669, -4569.1987706131321155},
  {3.0, -20.0, 0.028164316243102915394, -0.099760606942478215796},
  {0.1, 0.1, -1.1093431354464251835, -0.26837959028182494763},
  {1.5, 150.0, 0.32611567164589225930, 0.17329689612845265680},
  {-0.6, 0.0, -0.30670254935821581757, 0.0},
  {-0.9, 0.0, -0.19248713042166220530, 0.0},
  {-1.5, 0.0, -0.076309255320550886620, 0.0},
  {-1.5, 7.0, 0.25309622009393333780, -0.41902092244201463132},
}};
inline constexpr std::array<CPoint, 9> kGamma = {{
  {0.5, 0.0, 1.7724538509055160273, 0.0},
  {3.7, 0.0, 4.1706517837966040301, 0.0},
  {-2.5, 0.3, -0.61382299743774149045, -0.21123261493704177661},
  {10.0, 50.0, -2.3595766167786097997e-18, 1.5930675354875626891e-18},
  {0.25, -7.07, 0.000023025875909979272091, -1.9276747779627573819e-6},
  {1.0, 200.0, 1.2165619596760469399e-135, -4.4123123310187777959e-136},
  {-9.5, 3.0, 5.4643579436222039263e-10, 4.3251560512573683793e-10},
  {45.0, 1.0, -2.0861828000683001513e+54, -1.5991384979778032653e+54},
  {2.0, 100.0, 1.2765683751197216635e-67, -1.5145322626533177175e-65},
}};
inline constexpr std::array<CPoint, 9> kLogGamma = {{
  {0.5, 0.0, 0.57236494292470008707, 0.0},
  {3.7, 0.0, 1.4280723266653881292, 0.0},
  {-2.5, 0.3, -0.43208889261320192052, -9.0933454212897415073},
  {10.0, 50.0, -40.400262350482971022, 159.62737280472833495},
  {0.25, -7.07, -10.675399826355724275, -6.3667083034191252203},
  {1.0, 200.0, -310.59116814250063277, 860.44845480599089243},
  {-9.5, 3.0, -21.084387201187902863, -24.463191611141772053},
  {45.0, 1.0, 125.30603661228975030, 3.7955943695204055078},
  {2.0, 100.0, -149.25288886980268548, 362.86238008620362601},
}};
inline constexpr std::array<double, 108> kZeroOrdinates = {
  14.134725141734693790,
  21.022039638771554993,
  25.010857580145688763,
  30.424876125859513210,
  32.935061587739189691,
  37.586178158825671257,
  40.918719012147495187,
  43.327073280914999519,
  48.005150881167159728,
  49.773832477672302182,
  52.970321477714460644,
  56.446247697063394804,
  59.347044002602353080,
  60.831778524609809844,
  65.112544048081606661,
  67.079810529494173714,
  69.546401711173979253,
  72.067157674481907583,
  75.704690699083933168,
  77.144840068874805373,
  79.337375020249367923,
  82.910380854086030183,
  84.735492980517050106,
  87.425274613125229407,
  88.809111207634465424,
  92.491899270558484296,
  94.651344040519886967,
  95.870634228245309759,
  98.831194218193692233,
  101.31785100573139123,
  103.72553804047833942,
  105.44662305232609449,
  107.16861118427640752,
  111.02953554316967452,
  111.87465917699263709,
  114.32022091545271277,
  116.22668032085755438,
  118.79078286597621732,
  121.37012500242064592,
  122.94682929355258820,
  124.25681855434576718,
  127.51668387959649512,
  129.57870419995605099,
  131.08768853093265672,
  133.49773720299758645,
  134.75650975337387133,
  138.11604205453344320,
  139.73620895212138895,
  141.12370740402112376,
  143.11184580762063274,
  146.00098248676551855,
  147.42276534255960205,
  150.05352042078488035,
  150.92525761224146676,
  153.02469381119889620,
  156.11290929423786757,
  157.59759181759405989,
  158.84998817142049872,
  161.18896413759602752,
  163.03070968718198724,
  165.53706918790041883,
  167.18443997817451344,
  169.09451541556882149,
  169.91197647941169897,
  173.41153651959155296,
  174.75419152336572581,
  176.44143429771041889,
  178.37740777609997729,
  179.91648402025699614,
  182.20707848436646192,
  184.87446784838750880,
  185.59878367770747147,
  187.22892258350185199,
  189.41615865601693708,
  192.02665636071378655,
  193.07972660384570405,
  195.26539667952923532,
  196.87648184095831695,
  198.01530967625191242,
  201.26475194370378873,
  202.49359451414053428,
  204.18967180310455433,
  205.39469720216328603,
  207.90625888780620986,
  209.57650971685625985,
  211.69086259536530756,
  213.34791935971266619,
  214.54704478349142322,
  216.16953850826370027,
  219.06759634902137899,
  220.71491883931400337,
  221.43070555469333873,
  224.00700025460433521,
  224.98332466958228750,
  227.42144427967929131,
  229.33741330552534811,
  231.25018870049916477,
  231.98723525318024860,
  233.69340417890830064,
  236.52422966581620580,
  237.76982048092520400,
  239.55547757332762874,
  241.04915779621658641,
  242.82327193422260002,
  244.07089849707815824,
  247.13699007489749947,
  248.10199006014845926,
  249.57368964470720919,
};
struct Pk { double k, x, value; };
inline constexpr std::array<Pk, 24> kPk = {{
  {1, 0.1, -0.078530010806475991377},
  {1, 0.5, -0.31370719971178596682},
  {1, 1, -0.48053380079607358092},
  {1, 4, -0.52366825981945970538},
  {1, 10, -0.26764560864859787028},
  {1, 25, -0.093067474633890770588},
  {1.5, 0.1, 0.29875673426451172025},
  {1.5, 0.5, 0.042607516334299016043},
  {1.5, 1, -0.14823115736050992636},
  {1.5, 4, -0.29636572659482890427},
  {1.5, 10, -0.14134620893768304488},
  {1.5, 25, -0.041525045683958158998},
  {2, 0.1, 0.52028611523943436376},
  {2, 0.5, 0.25043970941303227187},
  {2, 1, 0.043981804688266529404},
  {2, 4, -0.17137809583955108152},
  {2, 10, -0.078067558125219647259},
  {2, 25, -0.019430473502686151499},
  {3, 0.1, 0.74026498786622499017},
  {3, 0.5, 0.45524984669669838092},
  {3, 1, 0.23157386290537289677},
  {3, 4, -0.056561271557662842195},
  {3, 10, -0.026442827096880468561},
  {3, 25, -0.0047693047545761643444},
}};
}  // namespace oracle
