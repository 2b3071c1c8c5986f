// Generated by tools/tw1_table.py. Do not edit.

pub(super) const GRID_START: f64 = -9.0;
pub(super) const GRID_STEP: f64 = 0.01;

#[rustfmt::skip]
pub(super) const TW1_CDF: [f64; 1601] = [
    7.576293076884732e-17,
    8.472567968167107e-17,
    9.472686465786909e-17,
    1.058842525796268e-16,
    1.1832853408003792e-16,
    1.3220500076132687e-16,
    1.4767486253448175e-16,
    1.649170490807836e-16,
    1.8413026726221435e-16,
    2.055347555408232e-16,
    2.2937499568876097e-16,
    2.5592208079194594e-16,
    2.854764974304503e-16,
    3.183713681936413e-16,
    3.5497587042178825e-16,
    3.9569883359386146e-16,
    4.4099358181125387e-16,
    4.913614348760653e-16,
    5.473580638901607e-16,
    6.09598071718873e-16,
    6.787619365011157e-16,
    7.556022357725176e-16,
    8.409517257951597e-16,
    9.357308189922392e-16,
    1.0409575925715853e-15,
    1.1577570912984296e-15,
    1.287372804582658e-15,
    1.431178311115884e-15,
    1.5906907753907692e-15,
    1.7675860249043553e-15,
    1.9637139572368374e-15,
    2.1811165577950123e-15,
    2.422046989941342e-15,
    2.688991606220599e-15,
    2.984692753860668e-15,
    3.3121745447636745e-15,
    3.674771078135239e-15,
    4.076157757951547e-15,
    4.5203846145587375e-15,
    5.0119142052289565e-15,
    5.555661494759026e-15,
    6.15704050656248e-15,
    6.82201014401942e-15,
    7.55713118460078e-15,
    8.369624008771862e-15,
    9.267431608257409e-15,
    1.025929235840974e-14,
    1.1354816567523228e-14,
    1.2564569636485282e-14,
    1.3900166265603922e-14,
    1.5374372545261387e-14,
    1.700121339903811e-14,
    1.8796096051500067e-14,
    2.077594127245127e-14,
    2.2959329114885277e-14,
    2.5366657182116658e-14,
    2.8020308962922286e-14,
    3.0944848561761876e-14,
    3.416722165180886e-14,
    3.771698191703578e-14,
    4.162653656747149e-14,
    4.5931413448582394e-14,
    5.067055206616525e-14,
    5.58866215875164e-14,
    6.162636981130374e-14,
    6.794099834412387e-14,
    7.488657781814508e-14,
    8.252449332555871e-14,
    9.092193864860439e-14,
    1.0015244401228102e-13,
    1.1029645680241019e-13,
    1.214419766306149e-13,
    1.3368523714929553e-13,
    1.471314606983627e-13,
    1.6189566535991405e-13,
    1.781035503576989e-13,
    1.9589245732981595e-13,
    2.1541243327428494e-13,
    2.3682732516142203e-13,
    2.6031606527039745e-13,
    2.8607397458945163e-13,
    3.143142399277308e-13,
    3.452694812219981e-13,
    3.791934883021757e-13,
    4.163630607544517e-13,
    4.570800570746437e-13,
    5.016735606755786e-13,
    5.505022733167967e-13,
    6.039571119789345e-13,
    6.624639658763144e-13,
    7.264867829900128e-13,
    7.965307862155935e-13,
    8.731460936588883e-13,
    9.569315680965309e-13,
    1.0485389237302736e-12,
    1.1486773556563981e-12,
    1.258118343183222e-12,
    1.3777009789359366e-12,
    1.5083376898853582e-12,
    1.6510204482969533e-12,
    1.8068274573306301e-12,
    1.9769303749145584e-12,
    2.1626022130007906e-12,
    2.3652257058955315e-12,
    2.5863025262003407e-12,
    2.8274631419041204e-12,
    3.0904774520458403e-12,
    3.3772663737756484e-12,
    3.6899141964183625e-12,
    4.0306820460009734e-12,
    4.402022335395649e-12,
    4.806594443969976e-12,
    5.247281464459329e-12,
    5.727208436749547e-12,
    6.249761937147931e-12,
    6.8186111374897116e-12,
    7.43773058546588e-12,
    8.111424686609135e-12,
    8.844354088045558e-12,
    9.641564098295746e-12,
    1.0508515355437758e-11,
    1.1451116608128082e-11,
    1.247576036057822e-11,
    1.358936081401018e-11,
    1.4799394958037382e-11,
    1.6113946755335226e-11,
    1.7541754427845985e-11,
    1.9092261643332747e-11,
    2.0775671972804764e-11,
    2.2603008183997683e-11,
    2.458617521898201e-11,
    2.6738028131885078e-11,
    2.9072445222053012e-11,
    3.160440606981586e-11,
    3.435007583954509e-11,
    3.732689525830079e-11,
    4.0553677660769135e-11,
    4.405071245394441e-11,
    4.783987656932605e-11,
    5.194475388271802e-11,
    5.639076305439448e-11,
    6.120529458177728e-11,
    6.641785765678059e-11,
    7.206023758532345e-11,
    7.81666644426722e-11,
    8.47739929352101e-11,
    9.192189654508541e-11,
    9.96530731824933e-11,
    1.0801346727473207e-10,
    1.1705250576450823e-10,
    1.2682335198424762e-10,
    1.3738317551618963e-10,
    1.4879344233364955e-10,
    1.611202238116794e-10,
    1.7443452764844518e-10,
    1.8881265045023902e-10,
    2.0433655559480621e-10,
    2.2109427658534683e-10,
    2.3918034638112484e-10,
    2.5869625758747386e-10,
    2.7975095258157117e-10,
    3.024613462251727e-10,
    3.269528846070878e-10,
    3.5336014001938514e-10,
    3.818274461634e-10,
    4.1250957441684007e-10,
    4.4557245599755787e-10,
    4.811939505924064e-10,
    5.195646656954871e-10,
    5.608888287387887e-10,
    6.053852179549408e-10,
    6.532881505381446e-10,
    7.048485374503038e-10,
    7.603350046019475e-10,
    8.200350852747832e-10,
    8.842564913775132e-10,
    9.533284623121748e-10,
    1.0276032030360885e-09,
    1.1074574090631006e-09,
    1.1932938907072778e-09,
    1.2855432975875597e-09,
    1.384665952901961e-09,
    1.4911537996352704e-09,
    1.6055324685473064e-09,
    1.7283634752207061e-09,
    1.8602465504699761e-09,
    2.00182211758349e-09,
    2.1537739153281234e-09,
    2.3168317872025315e-09,
    2.491774636911516e-09,
    2.6794335625679233e-09,
    2.880695179469093e-09,
    3.0965051471387275e-09,
    3.327871901940767e-09,
    3.575870614091373e-09,
    3.841647382515138e-09,
    4.1264236743807915e-09,
    4.4315010294005485e-09,
    4.758266036956396e-09,
    5.1081956119323116e-09,
    5.482862567762577e-09,
    5.883941523414152e-09,
    6.313215146847991e-09,
    6.77258075838852e-09,
    7.264057316180964e-09,
    7.789792800449808e-09,
    8.352072018151715e-09,
    8.953324849244687e-09,
    9.596134963290595e-09,
    1.0283249026043117e-08,
    1.1017586422571905e-08,
    1.1802249519675795e-08,
    1.2640534509546972e-08,
    1.3535942845208626e-08,
    1.4492193314569217e-08,
    1.5513234776397616e-08,
    1.6603259595260275e-08,
    1.776671780819734e-08,
    1.900833206776834e-08,
    2.0333113386164207e-08,
    2.1746377731109318e-08,
    2.3253763525047175e-08,
    2.486125006231836e-08,
    2.657517692477197e-08,
    2.840226441227126e-08,
    3.0349635070801145e-08,
    3.2424836341664737e-08,
    3.4635864397609147e-08,
    3.6991189236994856e-08,
    3.9499781069037496e-08,
    4.2171138069782206e-08,
    4.50153155810676e-08,
    4.8042956782494934e-08,
    5.1265324962824204e-08,
    5.469433741006096e-08,
    5.8342601047571955e-08,
    6.22234498312176e-08,
    6.635098407075414e-08,
    7.074011167949448e-08,
    7.540659151659555e-08,
    8.036707885249021e-08,
    8.563917310026428e-08,
    9.124146788342876e-08,
    9.719360356184656e-08,
    1.0351632233870307e-07,
    1.1023152598513125e-07,
    1.173623364497846e-07,
    1.2493315928909647e-07,
    1.3296975021001449e-07,
    1.4149928474888434e-07,
    1.505504312723396e-07,
    1.6015342742982772e-07,
    1.703401602081795e-07,
    1.8114424973718204e-07,
    1.9260113698000424e-07,
    2.047481755546403e-07,
    2.176247277315838e-07,
    2.312722648974037e-07,
    2.457344725768014e-07,
    2.6105736030622707e-07,
    2.7728937641906487e-07,
    2.94481528061974e-07,
    3.1268750658245065e-07,
    3.319638185563928e-07,
    3.5236992260518514e-07,
    3.7396837230205505e-07,
    3.9682496538730993e-07,
    4.210088995193936e-07,
    4.4659293481173627e-07,
    4.736535634705124e-07,
    5.022711867333043e-07,
    5.325302994710964e-07,
    5.645196826133646e-07,
    5.983326038724289e-07,
    6.340670268871652e-07,
    6.7182582928091e-07,
    7.117170297698594e-07,
    7.538540248627055e-07,
    7.983558353073846e-07,
    8.453473627842431e-07,
    8.949596571414239e-07,
    9.473301945196139e-07,
    1.0026031668995153e-06,
    1.0609297832696574e-06,
    1.1224685829935292e-06,
    1.1873857616833084e-06,
    1.2558555101355347e-06,
    1.3280603666181374e-06,
    1.4041915830922759e-06,
    1.4844495058362846e-06,
    1.5690439708507556e-06,
    1.6581947146276984e-06,
    1.7521318008006086e-06,
    1.851096063136018e-06,
    1.9553395654279253e-06,
    2.0651260788997737e-06,
    2.1807315775362958e-06,
    2.3024447520828554e-06,
    2.430567543178979e-06,
    2.5654156942832334e-06,
    2.707319325042885e-06,
    2.8566235255893854e-06,
    3.013688972613061e-06,
    3.1788925677502764e-06,
    3.3526280988749685e-06,
    3.5353069252748998e-06,
    3.727358687018819e-06,
    3.929232039656459e-06,
    4.141395414560321e-06,
    4.364337805977385e-06,
    4.598569585479122e-06,
    4.844623344473016e-06,
    5.103054765616713e-06,
    5.374443524069475e-06,
    5.659394219272275e-06,
    5.9585373380249565e-06,
    6.272530249944428e-06,
    6.602058236022136e-06,
    6.947835551029685e-06,
    7.310606520995864e-06,
    7.691146676411724e-06,
    8.090263922096387e-06,
    8.508799744877699e-06,
    8.947630459681922e-06,
    9.407668495420435e-06,
    9.889863721291105e-06,
    1.0395204814666549e-05,
    1.092472067157802e-05,
    1.147948186070928e-05,
    1.2060602122073321e-05,
    1.2669239911292142e-05,
    1.3306599990616344e-05,
    1.3973935067604494e-05,
    1.4672547482887438e-05,
    1.5403790947576082e-05,
    1.616907233196567e-05,
    1.6969853506220496e-05,
    1.7807653234277408e-05,
    1.868404912231347e-05,
    1.9600679622669887e-05,
    2.0559246094226927e-05,
    2.156151492083697e-05,
    2.2609319688588224e-05,
    2.3704563423206597e-05,
    2.484922088874724e-05,
    2.60453409486611e-05,
    2.7295048990451658e-05,
    2.860054941534503e-05,
    2.996412819350789e-05,
    3.13881554868417e-05,
    3.287508833966153e-05,
    3.4427473439166114e-05,
    3.604794994636662e-05,
    3.7739252398862484e-05,
    3.950421368665535e-05,
    4.1345768101933306e-05,
    4.3266954464231096e-05,
    4.527091932210343e-05,
    4.736092023213974e-05,
    4.9540329116686164e-05,
    5.181263570163118e-05,
    5.418145103447371e-05,
    5.665051108518635e-05,
    5.922368042924808e-05,
    6.190495601536164e-05,
    6.469847101810415e-05,
    6.760849877658033e-05,
    7.063945682045833e-05,
    7.37959109839876e-05,
    7.70825796087994e-05,
    8.05043378372434e-05,
    8.406622199608497e-05,
    8.77734340721126e-05,
    9.163134628046248e-05,
    9.56455057258567e-05,
    9.982163915855237e-05,
    0.00010416565782475638,
    0.0001086836624127071,
    0.0001133819480950218,
    0.00011826700966778748,
    0.00012334554678719147,
    0.00012862446930400783,
    0.00013411090269642163,
    0.00013981219360181352,
    0.00014573591544784034,
    0.00015188987418297522,
    0.00015828211410671793,
    0.0001649209238004198,
    0.00017181484215767796,
    0.0001789726645154783,
    0.00018640344888572394,
    0.00019411652228666906,
    0.00020212148717542022,
    0.0002104282279797524,
    0.0002190469177301311,
    0.00022798802479160533,
    0.00023726231969438183,
    0.00024688088206371986,
    0.00025685510764769643,
    0.0002671967154426125,
    0.00027791775491597064,
    0.0002890306133248797,
    0.00030054802313020634,
    0.0003124830695053164,
    0.00032484919793790163,
    0.0003376602219243117,
    0.0003509303307548147,
    0.00036467409738884807,
    0.00037890648641856,
    0.00039364286211906834,
    0.0004088989965844931,
    0.00042469107794695167,
    0.00044103571867810736,
    0.0004579499639702028,
    0.00047545130019492876,
    0.0004935576634386655,
    0.0005122874481105819,
    0.0005316595156228532,
    0.0005516932031388051,
    0.0005724083323884528,
    0.00059382521854659,
    0.00061596467917278,
    0.0006388480432084045,
    0.0006624971600295748,
    0.0006869344085513232,
    0.0007121827063808847,
    0.0007382655190159426,
    0.0007652068690848927,
    0.0007930313456255883,
    0.0008217641133981937,
    0.0008514309222291917,
    0.0008820581163820685,
    0.0009136726439506187,
    0.0009463020662710469,
    0.000979974567348135,
    0.0010147189632915398,
    0.001050564711757043,
    0.0010875419213890792,
    0.0011256813612580902,
    0.0011650144702903297,
    0.0012055733666826044,
    0.0012473908572982262,
    0.0012905004470385628,
    0.0013349363481853789,
    0.0013807334897073392,
    0.0014279275265261435,
    0.0014765548487362555,
    0.0015266525907726503,
    0.0015782586405200891,
    0.0016314116483584467,
    0.00168615103613814,
    0.001742517006079009,
    0.0018005505495863926,
    0.0018602934559782717,
    0.0019217883211171986,
    0.0019850785559392204,
    0.002050208394875215,
    0.002117222904155471,
    0.0021861679899928517,
    0.0022570904066361707,
    0.0023300377642874546,
    0.0024050585368755794,
    0.0024822020696801403,
    0.0025615185867966703,
    0.0026430591984379615,
    0.002726875908062201,
    0.002813021619322385,
    0.0029015501428278764,
    0.0029925162027119555,
    0.0030859754429975613,
    0.0031819844337526047,
    0.00328060067702941,
    0.003381882612578338,
    0.003485889623329277,
    0.003592682040633895,
    0.0037023211492591707,
    0.0038148691921262956,
    0.003930389374786254,
    0.004048945869624829,
    0.004170603819789316,
    0.004295429342829176,
    0.004423489534043125,
    0.004554852469524894,
    0.004689587208900499,
    0.004827763797748837,
    0.0049694532696986544,
    0.005114727648194128,
    0.005263659947921912,
    0.00541632417589191,
    0.005572795332165223,
    0.0057331494102210645,
    0.0058974633969564975,
    0.006065815272311253,
    0.006238284008511092,
    0.006414949568922681,
    0.006595892906513118,
    0.0067811959619081584,
    0.0069709416610412725,
    0.007165213912388376,
    0.007364097603781554,
    0.007567678598795674,
    0.0077760437327013465,
    0.007989280807979185,
    0.008207478589389455,
    0.008430726798590898,
    0.008659116108304424,
    0.008892738136015797,
    0.009131685437211823,
    0.009376051498146952,
    0.009625930728133345,
    0.00988141845135148,
    0.010142610898176984,
    0.01040960519601867,
    0.010682499359664872,
    0.010961392281134356,
    0.011246383719027562,
    0.011537574287376227,
    0.011835065443987972,
    0.012138959478281943,
    0.012449359498615942,
    0.012766369419099272,
    0.01309009394589286,
    0.013420638562991574,
    0.013758109517490572,
    0.014102613804332345,
    0.014454259150533288,
    0.014813153998892208,
    0.01517940749117655,
    0.015553129450788785,
    0.015934430364912336,
    0.01632342136613872,
    0.01672021421357444,
    0.017124921273430856,
    0.017537655499098387,
    0.017958530410704096,
    0.018387660074160258,
    0.018825159079698645,
    0.01927114251990084,
    0.019725725967221944,
    0.020189025451014003,
    0.02066115743405136,
    0.021142238788562927,
    0.02163238677177427,
    0.022131719000965486,
    0.022640353428048078,
    0.023158408313669124,
    0.023686002200843218,
    0.024223253888123256,
    0.02477028240231302,
    0.025327206970729026,
    0.02589414699301814,
    0.026471222012538747,
    0.02705855168731155,
    0.027656255760549406,
    0.028264454030772747,
    0.028883266321519992,
    0.0295128124506612,
    0.030153212199323112,
    0.030804585280436746,
    0.03146705130691531,
    0.03214072975947274,
    0.03282573995409425,
    0.03352220100916693,
    0.034230231812283386,
    0.0349499509867281,
    0.03568147685765815,
    0.03642492741799011,
    0.037180420294004174,
    0.03794807271067811,
    0.03872800145676397,
    0.03952032284961796,
    0.04032515269979903,
    0.04114260627544735,
    0.04197279826645611,
    0.042815842748451495,
    0.043671853146591895,
    0.044540942199204056,
    0.045423221921266306,
    0.046318803567754994,
    0.04722779759687069,
    0.04815031363315384,
    0.04908646043051035,
    0.05003634583515709,
    0.05100007674850627,
    0.05197775909000223,
    0.05296949775992633,
    0.05397539660218507,
    0.05499555836709849,
    0.056030084674203826,
    0.05707907597508867,
    0.05814263151627488,
    0.05922084930216164,
    0.06031382605805129,
    0.06142165719326994,
    0.06254443676439786,
    0.06368225743863358,
    0.06483521045729711,
    0.06600338559949814,
    0.06718687114597922,
    0.0683857538431579,
    0.06960011886737194,
    0.07083004978935892,
    0.07207562853897469,
    0.07333693537017427,
    0.07461404882626552,
    0.07590704570546067,
    0.0772160010267318,
    0.078540987995993,
    0.07988207797262352,
    0.08123934043634917,
    0.08261284295449309,
    0.08400265114961925,
    0.08540882866757825,
    0.08683143714597248,
    0.08827053618305852,
    0.08972618330709767,
    0.09119843394617451,
    0.09268734139849462,
    0.09419295680317773,
    0.0957153291115615,
    0.09725450505902844,
    0.09881052913737266,
    0.10038344356771711,
    0.10197328827399987,
    0.10358010085703742,
    0.10520391656918034,
    0.10684476828957917,
    0.1085026865000639,
    0.11017769926165756,
    0.11186983219173231,
    0.11357910844182263,
    0.1153055486761012,
    0.11704917105053837,
    0.1188099911927488,
    0.12058802218253599,
    0.12238327453315313,
    0.12419575617328071,
    0.12602547242973372,
    0.127872426010913,
    0.12973661699100317,
    0.13161804279493058,
    0.1335166981840848,
    0.13543257524281713,
    0.13736566336572156,
    0.13931594924570348,
    0.14128341686284773,
    0.14326804747408847,
    0.14526981960368798,
    0.147288709034533,
    0.14932468880025154,
    0.1513777291781523,
    0.1534477976830028,
    0.15553485906163256,
    0.15763887528838458,
    0.159759805561404,
    0.16189760629977393,
    0.1640522311414994,
    0.16622363094234524,
    0.16841175377552034,
    0.1706165449322238,
    0.1728379469230416,
    0.1750758994801983,
    0.17733033956067307,
    0.17960120135016217,
    0.1818884162679041,
    0.18419191297235768,
    0.18651161736773456,
    0.18884745261138272,
    0.19119933912202108,
    0.19356719458882182,
    0.1959509339813368,
    0.19835046956026475,
    0.20076571088905873,
    0.20319656484636495,
    0.20564293563929267,
    0.2081047248175059,
    0.21058183128813818,
    0.21307415133151925,
    0.21558157861770894,
    0.21810400422383353,
    0.2206413166522183,
    0.22319340184930556,
    0.2257601432253552,
    0.2283414216749169,
    0.23093711559806931,
    0.23354710092241113,
    0.23617125112580747,
    0.23880943725986736,
    0.24146152797415377,
    0.24412738954111518,
    0.246806885881726,
    0.24949987859182243,
    0.2522062269691318,
    0.2549257880409807,
    0.25765841659266653,
    0.26040396519648396,
    0.26316228424140126,
    0.2659332219633623,
    0.2687166244762104,
    0.2715123358032209,
    0.27432019790922746,
    0.2771400507333276,
    0.27997173222216065,
    0.2828150783637415,
    0.28566992322182927,
    0.2885360989708339,
    0.29141343593122865,
    0.29430176260546803,
    0.29720090571438723,
    0.3001106902340759,
    0.30303093943321,
    0.3059614749108198,
    0.3089021166344918,
    0.3118526829789775,
    0.3148129907652029,
    0.31778285529965844,
    0.3207620904141538,
    0.3237505085059267,
    0.32674792057808466,
    0.3297541362803676,
    0.33276896395021677,
    0.3357922106541262,
    0.33882368222927306,
    0.34186318332540155,
    0.344910517446951,
    0.3479654869954027,
    0.3510278933118401,
    0.3540975367197066,
    0.3571742165677304,
    0.36025773127301897,
    0.36334787836429355,
    0.36644445452525976,
    0.3695472556380837,
    0.37265607682697033,
    0.37577071250182675,
    0.3788909564019836,
    0.38201660163997575,
    0.3851474407453505,
    0.3882832657085032,
    0.39142386802450746,
    0.39456903873694155,
    0.3977185684816855,
    0.40087224753067563,
    0.4040298658356038,
    0.40719121307154177,
    0.41035607868048457,
    0.4135242519147863,
    0.4166955218804846,
    0.41986967758049226,
    0.42304650795764415,
    0.42622580193759113,
    0.42940734847150985,
    0.43259093657863945,
    0.43577635538860837,
    0.43896339418355185,
    0.44215184244000494,
    0.4453414898705503,
    0.44853212646521656,
    0.4517235425326141,
    0.4549155287407854,
    0.45810787615777726,
    0.461300376291895,
    0.46449282113165874,
    0.4676850031854275,
    0.47087671552067917,
    0.47406775180295696,
    0.47725790633444526,
    0.4804469740921785,
    0.48363475076587414,
    0.4868210327953712,
    0.4900056174076666,
    0.4931883026535453,
    0.4963688874437905,
    0.4995471715849577,
    0.5027229558147267,
    0.5058960418367819,
    0.5090662323552664,
    0.5122333311087449,
    0.5153971429037184,
    0.5185574736476425,
    0.5217141303814666,
    0.5248669213116776,
    0.5280156558418456,
    0.531160144603655,
    0.5343001994874255,
    0.5374356336721181,
    0.5405662616548033,
    0.5436918992796054,
    0.5468123637661099,
    0.5499274737372212,
    0.5530370492464822,
    0.556140911804839,
    0.5592388844068445,
    0.5623307915563042,
    0.5654164592913659,
    0.568495715209027,
    0.5715683884890871,
    0.5746343099175104,
    0.5776933119092248,
    0.5807452285303325,
    0.5837898955197456,
    0.5868271503102346,
    0.589856832048888,
    0.5928787816169961,
    0.5958928416493322,
    0.5988988565528565,
    0.6018966725248245,
    0.6048861375703027,
    0.6078671015190986,
    0.6108394160420948,
    0.6138029346669974,
    0.6167575127934879,
    0.6197030077077885,
    0.6226392785966365,
    0.6255661865606746,
    0.628483594627247,
    0.6313913677626172,
    0.6342893728835958,
    0.6371774788685926,
    0.6400555565680809,
    0.6429234788144921,
    0.6457811204315306,
    0.6486283582429145,
    0.6514650710805528,
    0.6542911397921483,
    0.6571064472482441,
    0.6599108783487008,
    0.6627043200286346,
    0.6654866612637746,
    0.6682577930753005,
    0.6710176085341141,
    0.6737660027645871,
    0.6765028729477515,
    0.6792281183239802,
    0.681941640195128,
    0.684643341926148,
    0.6873331289462067,
    0.6900109087492599,
    0.6926765908941537,
    0.6953300870041949,
    0.6979713107662429,
    0.7006001779293054,
    0.7032166063026487,
    0.7058205157534283,
    0.7084118282038481,
    0.7109904676278521,
    0.7135563600473526,
    0.7161094335280055,
    0.7186496181745413,
    0.7211768461256411,
    0.7236910515483937,
    0.7261921706323047,
    0.7286801415829034,
    0.7311549046149182,
    0.7336164019450476,
    0.7360645777843302,
    0.7384993783301227,
    0.7409207517576766,
    0.7433286482113496,
    0.745723019795433,
    0.7481038205646134,
    0.7504710065140733,
    0.7528245355692412,
    0.7551643675751943,
    0.7574904642857231,
    0.7598027893520652,
    0.7621013083113093,
    0.7643859885744954,
    0.7666567994143916,
    0.7689137119529708,
    0.7711566991486093,
    0.7733857357829683,
    0.7756007984476243,
    0.7778018655304092,
    0.7799889172014892,
    0.7821619353991918,
    0.7843209038155646,
    0.7864658078817167,
    0.7885966347529016,
    0.7907133732933807,
    0.7928160140610644,
    0.7949045492919377,
    0.7969789728842819,
    0.7990392803826892,
    0.8010854689618919,
    0.8031175374104065,
    0.8051354861139839,
    0.807139317038915,
    0.809129033715145,
    0.8111046412192479,
    0.8130661461572399,
    0.8150135566472602,
    0.816946882302098,
    0.8188661342116103,
    0.8207713249249945,
    0.8226624684329622,
    0.8245395801497948,
    0.8264026768952935,
    0.8282517768766362,
    0.8300868996701447,
    0.8319080662029609,
    0.8337152987346527,
    0.8355086208387462,
    0.8372880573841854,
    0.839053634516743,
    0.8408053796403695,
    0.8425433213985014,
    0.8442674896553221,
    0.8459779154769848,
    0.8476746311128174,
    0.849357669976491,
    0.8510270666271722,
    0.8526828567506697,
    0.8543250771405567,
    0.8559537656793109,
    0.8575689613194409,
    0.8591707040646248,
    0.8607590349508736,
    0.8623339960276875,
    0.8638956303392634,
    0.8654439819057106,
    0.8669790957043029,
    0.868501017650774,
    0.8700097945806481,
    0.8715054742306262,
    0.8729881052200015,
    0.8744577370321602,
    0.875914419996117,
    0.8773582052681258,
    0.8787891448133545,
    0.8802072913876283,
    0.8816126985192616,
    0.8830054204909463,
    0.8843855123217468,
    0.8857530297491667,
    0.887108029211307,
    0.8884505678291279,
    0.8897807033887917,
    0.8910984943241208,
    0.8924039996991499,
    0.8936972791907924,
    0.8949783930716048,
    0.8962474021926763,
    0.8975043679666233,
    0.898749352350714,
    0.8999824178301026,
    0.901203627401189,
    0.9024130445551141,
    0.9036107332613704,
    0.9047967579515537,
    0.9059711835032405,
    0.9071340752240054,
    0.9082854988355792,
    0.9094255204581368,
    0.9105542065947339,
    0.9116716241158829,
    0.9127778402442845,
    0.9138729225396912,
    0.9149569388839224,
    0.916029957466048,
    0.9170920467676978,
    0.9181432755485394,
    0.9191837128319051,
    0.920213427890582,
    0.9212324902327507,
    0.9222409695880818,
    0.9232389358940019,
    0.9242264592821096,
    0.925203610064757,
    0.9261704587217923,
    0.9271270758874653,
    0.928073532337501,
    0.9290098989763335,
    0.9299362468244948,
    0.9308526470061952,
    0.9317591707370438,
    0.9326558893119512,
    0.9335428740931876,
    0.9344201964986233,
    0.9352879279901181,
    0.9361461400620965,
    0.9369949042302793,
    0.9378342920205847,
    0.938664374958197,
    0.9394852245568139,
    0.9402969123080416,
    0.9410995096709847,
    0.9418930880619679,
    0.9426777188444646,
    0.9434534733191633,
    0.9442204227142149,
    0.9449786381756404,
    0.9457281907579125,
    0.9464691514146933,
    0.9472015909897424,
    0.9479255802079972,
    0.9486411896667966,
    0.9493484898272915,
    0.9500475510060049,
    0.9507384433665571,
    0.9514212369115534,
    0.9520960014746376,
    0.9527628067126882,
    0.9534217220982015,
    0.9540728169118041,
    0.9547161602349458,
    0.9553518209427385,
    0.955979867696947,
    0.9566003689391508,
    0.9572133928840356,
    0.9578190075128614,
    0.9584172805670691,
    0.9590082795420378,
    0.9595920716809976,
    0.960168723969089,
    0.9607383031275607,
    0.9613008756081325,
    0.9618565075874808,
    0.9624052649618863,
    0.9629472133420154,
    0.963482418047841,
    0.96401094410371,
    0.9645328562335466,
    0.965048218856188,
    0.9655570960808667,
    0.966059551702818,
    0.9665556491990263,
    0.9670454517241011,
    0.9675290221062854,
    0.9680064228435937,
    0.9684777161000742,
    0.9689429637022021,
    0.9694022271353944,
    0.969855567540661,
    0.9703030457113463,
    0.9707447220900356,
    0.9711806567655448,
    0.9716109094700465,
    0.972035539576305,
    0.9724546060950334,
    0.9728681676723578,
    0.9732762825873951,
    0.9736790087499455,
    0.9740764036982863,
    0.9744685245970888,
    0.974855428235414,
    0.9752371710248495,
    0.9756138089977142,
    0.9759853978053924,
    0.9763519927167503,
    0.9767136486166624,
    0.9770704200046262,
    0.9774223609934802,
    0.977769525308214,
    0.9781119662848714,
    0.9784497368695428,
    0.9787828896174477,
    0.9791114766921155,
    0.9794355498646361,
    0.9797551605130089,
    0.9800703596215756,
    0.9803811977805299,
    0.9806877251855084,
    0.9809899916372724,
    0.9812880465414523,
    0.9815819389083799,
    0.9818717173529968,
    0.9821574300948269,
    0.9824391249580291,
    0.9827168493715315,
    0.9829906503692096,
    0.9832605745901591,
    0.9835266682790187,
    0.9837889772863707,
    0.9840475470691997,
    0.9843024226914132,
    0.9845536488244304,
    0.9848012697478269,
    0.9850453293500381,
    0.9852858711291266,
    0.985522938193598,
    0.9857565732632776,
    0.985986818670245,
    0.9862137163598063,
    0.9864373078915392,
    0.9866576344403718,
    0.9868747367977203,
    0.9870886553726658,
    0.9872994301931874,
    0.9875071009074399,
    0.9877117067850623,
    0.9879132867185553,
    0.9881118792246705,
    0.9883075224458677,
    0.988500254151795,
    0.9886901117408161,
    0.9888771322415668,
    0.9890613523145612,
    0.9892428082538226,
    0.9894215359885523,
    0.9895975710848284,
    0.9897709487473481,
    0.9899417038211892,
    0.9901098707936046,
    0.9902754837958524,
    0.9904385766050465,
    0.9905991826460426,
    0.9907573349933367,
    0.9909130663730149,
    0.9910664091646941,
    0.9912173954035152,
    0.9913660567821414,
    0.9915124246527932,
    0.9916565300292837,
    0.9917984035890955,
    0.9919380756754634,
    0.9920755762994825,
    0.9922109351422266,
    0.992344181556893,
    0.9924753445709552,
    0.9926044528883313,
    0.9927315348915757,
    0.9928566186440702,
    0.9929797318922451,
    0.9931009020677923,
    0.9932201562899112,
    0.9933375213675425,
    0.9934530238016411,
    0.9935666897874244,
    0.9936785452166529,
    0.9937886156799215,
    0.9938969264689308,
    0.9940035025788005,
    0.9941083687103579,
    0.9942115492724551,
    0.9943130683842764,
    0.9944129498776575,
    0.9945112172994024,
    0.9946078939136125,
    0.9947030027040049,
    0.9947965663762467,
    0.9948886073602844,
    0.9949791478126682,
    0.9950682096188893,
    0.995155814395707,
    0.9952419834934814,
    0.995326737998499,
    0.9954100987353013,
    0.9954920862690155,
    0.9955727209076702,
    0.9956520227045194,
    0.9957300114603556,
    0.9958067067258327,
    0.9958821278037632,
    0.9959562937514321,
    0.9960292233828879,
    0.9961009352712459,
    0.9961714477509725,
    0.9962407789201652,
    0.9963089466428338,
    0.9963759685511668,
    0.9964418620477993,
    0.9965066443080554,
    0.9965703322822147,
    0.9966329426977345,
    0.9966944920614874,
    0.9967549966619924,
    0.9968144725716112,
    0.9968729356487669,
    0.9969304015401388,
    0.9969868856828369,
    0.9970424033065893,
    0.9970969694359043,
    0.9971505988922226,
    0.997203306296066,
    0.997255106069169,
    0.9973060124366049,
    0.9973560394288944,
    0.9974052008841029,
    0.9974535104499395,
    0.997500981585823,
    0.9975476275649546,
    0.9975934614763684,
    0.9976384962269679,
    0.9976827445435625,
    0.9977262189748777,
    0.9977689318935616,
    0.997810895498167,
    0.997852121815141,
    0.9978926227007839,
    0.99793240984319,
    0.9979714947642084,
    0.9980098888213405,
    0.998047603209674,
    0.9980846489637667,
    0.9981210369595312,
    0.9981567779161101,
    0.998191882397727,
    0.9982263608155323,
    0.9982602234294262,
    0.9982934803498806,
    0.9983261415397301,
    0.998358216815963,
    0.998389715851492,
    0.9984206481769108,
    0.9984510231822401,
    0.9984808501186485,
    0.9985101381001783,
    0.9985388961054334,
    0.9985671329792748,
    0.9985948574344866,
    0.9986220780534327,
    0.998648803289701,
    0.9986750414697313,
    0.9987008007944271,
    0.998726089340755,
    0.9987509150633286,
    0.9987752857959812,
    0.9987992092533181,
    0.99882269303226,
    0.9988457446135691,
    0.998868371363359,
    0.9988905805346001,
    0.9989123792685939,
    0.9989337745964484,
    0.9989547734405296,
    0.9989753826159101,
    0.998995608831783,
    0.9990154586928864,
    0.9990349387008954,
    0.999054055255803,
    0.9990728146573051,
    0.9990912231061381,
    0.9991092867054316,
    0.9991270114620384,
    0.9991444032878427,
    0.9991614680010624,
    0.9991782113275435,
    0.9991946389020209,
    0.9992107562693874,
    0.9992265688859386,
    0.9992420821206041,
    0.9992573012561651,
    0.9992722314904645,
    0.9992868779375997,
    0.9993012456290952,
    0.9993153395150788,
    0.9993291644654272,
    0.9993427252709094,
    0.9993560266443163,
    0.9993690732215735,
    0.9993818695628379,
    0.9993944201535997,
    0.9994067294057448,
    0.9994188016586295,
    0.9994306411801271,
    0.9994422521676684,
    0.9994536387492694,
    0.9994648049845443,
    0.9994757548657117,
    0.9994864923185833,
    0.9994970212035428,
    0.9995073453165141,
    0.9995174683899173,
    0.9995273940936084,
    0.9995371260358163,
    0.9995466677640621,
    0.9995560227660668,
    0.999565194470653,
    0.9995741862486277,
    0.9995830014136592,
    0.9995916432231455,
    0.9996001148790624,
    0.9996084195288105,
    0.9996165602660482,
    0.9996245401315081,
    0.9996323621138162,
    0.9996400291502829,
    0.9996475441277017,
    0.9996549098831268,
    0.9996621292046407,
    0.9996692048321156,
    0.9996761394579614,
    0.9996829357278701,
    0.999689596241545,
    0.9996961235534123,
    0.9997025201733456,
    0.999708788567359,
    0.999714931158297,
    0.999720950326525,
    0.9997268484105938,
    0.9997326277079119,
    0.9997382904753946,
    0.9997438389301131,
    0.9997492752499277,
    0.9997546015741252,
    0.9997598200040266,
    0.9997649326036095,
    0.9997699414001014,
    0.9997748483845849,
    0.9997796555125669,
    0.9997843647045765,
    0.9997889778467187,
    0.9997934967912439,
    0.999797923357096,
    0.9998022593304666,
    0.9998065064653224,
    0.9998106664839426,
    0.9998147410774391,
    0.9998187319062692,
    0.999822640600749,
    0.9998264687615455,
    0.9998302179601773,
    0.9998338897394969,
    0.9998374856141665,
    0.9998410070711319,
    0.9998444555700902,
    0.9998478325439458,
    0.9998511393992523,
    0.9998543775166735,
    0.9998575482514069,
    0.9998606529336221,
    0.9998636928688817,
    0.9998666693385644,
    0.9998695836002672,
    0.9998724368882248,
    0.9998752304136969,
    0.9998779653653691,
    0.9998806429097341,
    0.9998832641914835,
    0.9998858303338701,
    0.9998883424390911,
    0.9998908015886415,
    0.9998932088436784,
    0.9998955652453729,
    0.9998978718152594,
    0.9999001295555741,
    0.9999023394495942,
    0.9999045024619676,
    0.9999066195390451,
    0.9999086916091923,
    0.9999107195831141,
    0.9999127043541591,
    0.9999146467986336,
    0.9999165477760941,
    0.9999184081296525,
    0.9999202286862607,
    0.9999220102570023,
    0.999923753637373,
    0.999925459607558,
    0.9999271289327115,
    0.9999287623632168,
    0.9999303606349579,
    0.9999319244695756,
    0.999933454574728,
    0.9999349516443385,
    0.9999364163588462,
    0.999937849385448,
    0.9999392513783439,
    0.9999406229789621,
    0.9999419648162023,
    0.999943277506655,
    0.9999445616548379,
    0.9999458178533973,
    0.9999470466833474,
    0.9999482487142658,
    0.999949424504514,
    0.99995057460144,
    0.9999516995415795,
    0.9999527998508564,
    0.9999538760447846,
    0.9999549286286504,
    0.9999559580977097,
    0.9999569649373733,
    0.9999579496233869,
    0.9999589126220128,
    0.9999598543902093,
    0.9999607753757991,
    0.9999616760176486,
    0.999962556745823,
    0.9999634179817674,
    0.9999642601384562,
    0.9999650836205571,
    0.9999658888245888,
    0.9999666761390776,
    0.9999674459446976,
    0.9999681986144329,
    0.9999689345137162,
    0.9999696540005741,
    0.9999703574257659,
    0.9999710451329277,
    0.9999717174586997,
    0.9999723747328704,
    0.9999730172784995,
    0.9999736454120497,
    0.9999742594435161,
    0.9999748596765469,
    0.999975446408565,
    0.9999760199308929,
    0.9999765805288671,
    0.9999771284819559,
    0.9999776640638689,
    0.9999781875426731,
    0.9999786991809028,
    0.9999791992356637,
    0.9999796879587411,
    0.9999801655967044,
    0.9999806323910067,
    0.9999810885780872,
    0.9999815343894679,
    0.9999819700518526,
    0.9999823957872176,
    0.9999828118129065,
    0.9999832183417255,
    0.9999836155820252,
    0.9999840037377973,
    0.9999843830087523,
    0.9999847535904128,
    0.9999851156741892,
    0.9999854694474667,
    0.9999858150936837,
    0.999986152792407,
    0.9999864827194155,
    0.9999868050467731,
    0.9999871199428997,
    0.9999874275726495,
    0.9999877280973799,
    0.9999880216750221,
    0.999988308460149,
    0.9999885886040469,
    0.999988862254775,
    0.9999891295572356,
    0.9999893906532392,
    0.9999896456815613,
    0.9999898947780116,
    0.9999901380754856,
    0.9999903757040304,
    0.999990607790901,
    0.9999908344606162,
    0.9999910558350155,
    0.9999912720333115,
    0.9999914831721486,
    0.9999916893656509,
    0.9999918907254768,
    0.9999920873608673,
    0.9999922793786971,
    0.9999924668835231,
    0.9999926499776338,
    0.9999928287610935,
    0.9999930033317888,
    0.9999931737854765,
    0.9999933402158229,
    0.9999935027144516,
    0.9999936613709833,
    0.99999381627308,
    0.9999939675064823,
    0.9999941151550529,
    0.9999942593008114,
    0.9999944000239799,
    0.9999945374030146,
    0.9999946715146416,
    0.9999948024339025,
    0.9999949302341783,
    0.9999950549872326,
    0.9999951767632407,
    0.9999952956308255,
    0.999995411657091,
    0.9999955249076529,
    0.9999956354466679,
    0.9999957433368717,
    0.9999958486396012,
    0.9999959514148281,
    0.9999960517211877,
    0.999996149616009,
    0.9999962451553369,
    0.9999963383939643,
    0.9999964293854617,
    0.9999965181821959,
    0.999996604835359,
    0.9999966893949951,
    0.9999967719100253,
    0.999996852428267,
    0.9999969309964649,
    0.9999970076603069,
    0.9999970824644511,
    0.9999971554525472,
    0.9999972266672595,
    0.9999972961502864,
    0.9999973639423791,
    0.9999974300833678,
    0.9999974946121787,
    0.9999975575668519,
    0.9999976189845657,
    0.999997678901647,
    0.9999977373536003,
    0.9999977943751182,
    0.9999978500000994,
    0.9999979042616727,
    0.9999979571922044,
    0.9999980088233213,
    0.9999980591859282,
    0.9999981083102155,
    0.999998156225686,
    0.9999982029611615,
    0.9999982485448011,
    0.9999982930041156,
    0.9999983363659813,
    0.9999983786566556,
    0.9999984199017882,
    0.9999984601264365,
    0.9999984993550783,
    0.9999985376116255,
    0.9999985749194327,
    0.9999986113013165,
    0.9999986467795605,
    0.9999986813759328,
    0.9999987151116914,
    0.9999987480076036,
    0.9999987800839498,
    0.9999988113605378,
    0.9999988418567131,
    0.9999988715913689,
    0.9999989005829562,
    0.9999989288494945,
    0.9999989564085804,
    0.9999989832773976,
    0.9999990094727257,
    0.9999990350109509,
    0.9999990599080754,
    0.9999990841797188,
    0.9999991078411404,
    0.9999991309072347,
    0.9999991533925444,
    0.9999991753112699,
    0.999999196677275,
    0.9999992175040967,
    0.9999992378049507,
    0.9999992575927361,
    0.9999992768800509,
    0.9999992956791901,
    0.9999993140021581,
    0.9999993318606728,
    0.999999349266173,
    0.9999993662298239,
    0.9999993827625266,
    0.9999993988749207,
    0.9999994145773893,
    0.9999994298800688,
    0.999999444792854,
    0.9999994593254017,
    0.9999994734871351,
    0.9999994872872544,
    0.9999995007347354,
    0.9999995138383401,
    0.9999995266066198,
    0.999999539047917,
    0.9999995511703779,
    0.9999995629819458,
    0.9999995744903774,
    0.9999995857032394,
    0.999999596627915,
    0.9999996072716107,
    0.999999617641357,
    0.9999996277440127,
    0.9999996375862709,
    0.9999996471746638,
    0.9999996565155618,
    0.9999996656151819,
    0.9999996744795896,
    0.9999996831147021,
    0.9999996915262916,
    0.9999996997199908,
    0.9999997077012932,
    0.9999997154755594,
    0.9999997230480164,
    0.999999730423766,
    0.999999737607782,
    0.9999997446049175,
    0.9999997514199083,
    0.9999997580573693,
    0.9999997645218051,
    0.9999997708176096,
    0.9999997769490663,
    0.9999997829203529,
    0.9999997887355473,
    0.9999997943986224,
    0.9999997999134554,
    0.999999805283828,
    0.9999998105134248,
    0.9999998156058441,
    0.9999998205645901,
    0.9999998253930829,
    0.9999998300946566,
    0.9999998346725621,
    0.99999983912997,
    0.9999998434699727,
    0.9999998476955836,
    0.9999998518097405,
    0.9999998558153101,
    0.9999998597150875,
    0.999999863511796,
];
