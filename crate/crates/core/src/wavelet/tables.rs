// Generated by tools/gen_filters.py. Do not edit by hand.

#![allow(clippy::excessive_precision, clippy::unreadable_literal, clippy::approx_constant)]

pub(crate) const DB1: [f64; 2] = [
    0.7071067811865475727373109,
    0.7071067811865475727373109,
];

pub(crate) const DB2: [f64; 4] = [
    -0.1294095225512603697382019,
    0.2241438680420133888748779,
    0.8365163037378079424755128,
    0.4829629131445341561068574,
];

pub(crate) const DB3: [f64; 6] = [
    0.03522629188570953334691538,
    -0.085441273882026658181843,
    -0.1350110200102545843225954,
    0.4598775021184915434702134,
    0.806891509311092547385158,
    0.3326705529500826319377893,
];

pub(crate) const DB4: [f64; 8] = [
    -0.010597401785069031701636,
    0.03288301166688519655556533,
    0.03084138183556076398539325,
    -0.1870348117190930858910747,
    -0.02798376941685985427876737,
    0.6308807679298589210503678,
    0.7148465705529156721809159,
    0.2303778133088965063279829,
];

pub(crate) const DB5: [f64; 10] = [
    0.003335725285473771246219643,
    -0.0125807519990819988153774,
    -0.006241490212798274372918428,
    0.07757149384004571879280832,
    -0.03224486958463837482646852,
    -0.2422948870663820253312792,
    0.1384281459013207427055647,
    0.72430852843777293603722,
    0.6038292697971896494379962,
    0.1601023979741929281761514,
];

pub(crate) const DB6: [f64; 12] = [
    -0.001077301085308479591112762,
    0.004777257510945510758648691,
    0.0005538422011614961256234513,
    -0.03158203931748602977247486,
    0.02752286553030572693878675,
    0.09750160558732304250106893,
    -0.1297668675672619398309138,
    -0.2262646939654398281493997,
    0.3152503517091976292796573,
    0.751133908021095364482278,
    0.4946238903984530588253676,
    0.1115407433501094669470177,
];

pub(crate) const DB7: [f64; 14] = [
    0.0003537137999745202407257672,
    -0.001801640704047490848874191,
    0.0004295779729213665149717416,
    0.01255099855609984049742422,
    -0.01657454163066688149208439,
    -0.03802993693501441341275893,
    0.08061260915108307834042733,
    0.07130921926683025935389537,
    -0.2240361849938749816413264,
    -0.1439060039285649794660316,
    0.4697822874051931218986056,
    0.729132090846235092485017,
    0.3965393194819172850706934,
    0.07785205408500918411451863,
];

pub(crate) const DB8: [f64; 16] = [
    -0.0001174767841247695347684996,
    0.0006754494064505693314351409,
    -0.0003917403733769470497612375,
    -0.004870352993451574144523342,
    0.008746094047405776616965767,
    0.01398102791739828237860266,
    -0.04408825393079475463142813,
    -0.0173693010018075473521737,
    0.1287474266204784723033328,
    0.0004724845739132827945883086,
    -0.284015542961546907374526,
    -0.01582910525634930593019689,
    0.5853546836542067310915627,
    0.6756307362972897578856646,
    0.3128715909142999462844159,
    0.05441584224310400813573452,
];

pub(crate) const DB9: [f64; 18] = [
    0.00003934732031627160257639467,
    -0.0002519631889427101237646789,
    0.0002303857635231959727958179,
    0.001847646883056226546279688,
    -0.004281503682463430257576498,
    -0.004723204757751397163401119,
    0.02236166212367909564284751,
    0.0002509471148314519725781857,
    -0.06763282906132997429615727,
    0.03072568147933337975863388,
    0.1485407493381063759319005,
    -0.09684078322297645646798969,
    -0.293273783279174915517018,
    0.1331973858250075637421617,
    0.657288078051300517223865,
    0.6048231236901111529391528,
    0.2438346746125903408142221,
    0.03807794736387834499957705,
];

pub(crate) const DB10: [f64; 20] = [
    -0.00001326420289452124428306642,
    0.00009358867032006959192202283,
    -0.0001164668551292854489819309,
    -0.0006858566949597116185755041,
    0.001992405295185056129936285,
    0.001395351747052901063630981,
    -0.01073317548333057452891737,
    0.003606553566956169701307466,
    0.0332126740593410019197762,
    -0.02945753682187581337648119,
    -0.07139414716639708169410028,
    0.09305736460357234840490293,
    0.1273693403357932518726869,
    -0.1959462743773770498911801,
    -0.2498464243273153806423892,
    0.2811723436605774728569429,
    0.6884590394536035384831507,
    0.5272011889317256283504776,
    0.188176800077691497303789,
    0.02667005790055555422557454,
];

pub(crate) const DB11: [f64; 22] = [
    0.00000449427427723651031236593,
    -0.00003463498418698499558242287,
    0.00005443907469936847464894725,
    0.000249152523552823479575935,
    -0.0008930232506662646053269272,
    -0.0003085928588151431897594612,
    0.004928417656059041335181448,
    -0.003340858873014445392518601,
    -0.01536482090620159939031719,
    0.02084090436018106243243331,
    0.03133509021904607588782099,
    -0.06643878569502520425871239,
    -0.04647995511668418650019774,
    0.1498120124663784857865778,
    0.06604358819668319779960797,
    -0.2742308468179469604919518,
    -0.1622752450274903557314587,
    0.4119643689479074444292905,
    0.685686774916200558749324,
    0.4498997643560453396638366,
    0.144067021150624502423554,
    0.01869429776147108271389108,
];

pub(crate) const DB12: [f64; 24] = [
    -0.000001529071758068510927610381,
    0.00001277695221937976660761711,
    -0.00002424154575703078517653379,
    -0.00008850410920820432018191193,
    0.0003886530628209314340397451,
    0.000006545128212509595856682682,
    -0.002179503618627760298809282,
    0.002248607240995237777775317,
    0.006711499008795509570168836,
    -0.01284082519830068332133965,
    -0.01221864906974827989782906,
    0.04154627749508443823600601,
    0.01084913025582218484843544,
    -0.09643212009650707627894661,
    0.005359569674352150300822295,
    0.1824786059275796679113313,
    -0.02377925725606972601200439,
    -0.3161784537527855265537369,
    -0.0447638856537746279706802,
    0.5158864784278156534469417,
    0.6571987225793071152324387,
    0.3773551352142126558142365,
    0.1095662728211851538739907,
    0.01311225795722951829869185,
];

pub(crate) const DB13: [f64; 26] = [
    0.0000005220035098454864363765743,
    -0.000004700416479360868313554581,
    0.00001044193057140813770853564,
    0.00003067853757932549645581419,
    -0.0001651289885565054892449521,
    0.00004925152512628946422940796,
    0.0009323261308672633465230439,
    -0.001315673911892298927200917,
    -0.002761911234656862224046137,
    0.007255589401617566248925417,
    0.003923941448797416131633042,
    -0.02383142071032364958660388,
    0.002379972254059078626275969,
    0.05613947710028342752419661,
    -0.02648840647534369402427146,
    -0.1058076181879343269365279,
    0.07294893365677716789985396,
    0.1794760794293398520338201,
    -0.1245767307508152538231272,
    -0.3149729077113886388517017,
    0.08698572617964724085215522,
    0.5888895704312189227636054,
    0.6110558511587876884263437,
    0.3119963221604380443352511,
    0.08286124387290277892859081,
    0.009202133538962367284574917,
];

pub(crate) const DB14: [f64; 28] = [
    -0.0000001787139968311359190346126,
    0.000001724994675367812683224804,
    -0.000004389704901781394217219912,
    -0.00001033720918457077417263942,
    0.00006875504252697509349062654,
    -0.00004177724577037259646008008,
    -0.0003868319473129545036683974,
    0.0007080211542355278626220683,
    0.001061691085606761937240594,
    -0.00384963886802218739277559,
    -0.000746218989268384973179149,
    0.01278949326633340918824011,
    -0.005615049530356959299470798,
    -0.03018535154039063417297228,
    0.02698140830791291577828162,
    0.05523712625921604196799208,
    -0.07154895550404613557837763,
    -0.08674841156816968934517575,
    0.139989016584460695957759,
    0.1383952138648066043646878,
    -0.2180335299932760484420413,
    -0.2716885522787480522488579,
    0.2186706877589065234346322,
    0.6311878491048568129428986,
    0.5543056179408938355379632,
    0.2548502677926213766390617,
    0.06236475884939889774427613,
    0.006461153460087947636436567,
];

pub(crate) const DB15: [f64; 30] = [
    0.0000000613335991330575202009888,
    -0.0000006316882325881664497172364,
    0.000001811270407940577187720535,
    0.000003362987181737579996164498,
    -0.00002813329626604781360057518,
    0.00002579269915531893584011679,
    0.0001558964899205997345355001,
    -0.0003595652443624687945658569,
    -0.0003734823541376169767427862,
    0.001943323980382211449424723,
    -0.0002417564907616242717795091,
    -0.006487734560315745399594611,
    0.005101000360407542850993412,
    0.01508391802783590196490593,
    -0.02081005016969308257790416,
    -0.02576700732843996421994603,
    0.05478055058450761322097478,
    0.03387714392350768544126538,
    -0.1111209360372316934384429,
    -0.03966617655579094542384055,
    0.1901467140071229910969208,
    0.06528295284877282111946073,
    -0.2888825965669656326006987,
    -0.1932041396091454255046216,
    0.3390025354547315239450711,
    0.6458131403574243201148875,
    0.4926317717081395985978531,
    0.2060238639869957366634878,
    0.04674339489276627124247909,
    0.004538537361578899240188711,
];

pub(crate) const DB16: [f64; 32] = [
    -0.00000002109339630100743115964628,
    0.0000002308784086857545741704433,
    -0.0000007363656785451205081044425,
    -0.000001043571342311606551210568,
    0.00001133660866127625808821681,
    -0.00001394566898820889261779565,
    -0.00006103596621410935978233742,
    0.0001747872452253381695026768,
    0.0001142415200387223909008275,
    -0.000941021749359567563457396,
    0.0004078969808497128510076102,
    0.003128023381206268983129037,
    -0.003644279621498389912931382,
    -0.006990014563413916338918686,
    0.01399376885982873096325729,
    0.0102976596409559695288749,
    -0.03688839769173014176972814,
    -0.007588974368857737823335086,
    0.07592423604427631089741624,
    -0.006239722752474871972361292,
    -0.1323883055638103989348764,
    0.02734026375271604233918588,
    0.2111906939471042965461578,
    -0.02791820813302827580804077,
    -0.3270633105279177055280115,
    -0.08975108940248964495278727,
    0.4402902568863569232604505,
    0.6373563320837889456527137,
    0.4303127228460038034008051,
    0.1650642834888531307324655,
    0.03490771432367334448088059,
    0.003189220925347738093413863,
];

pub(crate) const DB17: [f64; 34] = [
    0.000000007267492968561608489023462,
    -0.00000008423948446002679605989951,
    0.0000002957700933316856885102041,
    0.0000003016549609994557294461099,
    -0.000004505942477222988364309996,
    0.000006990600985076751464303117,
    0.0000231868137987459522119868,
    -0.00008204803202453391495520274,
    -0.00002561010956654845806463629,
    0.0004394654277686436895551669,
    -0.0003281325194098379705205659,
    -0.001436845304802976223956801,
    0.002301205242153545656863534,
    0.002967996691526094722723972,
    -0.008602921520322855467033385,
    -0.003042989981354637159943755,
    0.02273367658394627108253694,
    -0.003270955535819293751725878,
    -0.04692243838926973831249256,
    0.02231233617810379765700191,
    0.0811059866541608831536081,
    -0.05709141963167693040182016,
    -0.1268156917782863046806341,
    0.1011354891774702696727317,
    0.197310589565010990886762,
    -0.126599752215882710437711,
    -0.3283207483639617452197967,
    0.02731497040329363551469655,
    0.5183157640569377999639755,
    0.6109966156846228235721696,
    0.370350724152641141984077,
    0.1312149033078243987038292,
    0.02598539370360604394694093,
    0.002241807001037312771507537,
];

pub(crate) const DB18: [f64; 36] = [
    -0.000000002507934454948598310760174,
    0.00000003068835863045174938221605,
    -0.000000117609876702823171770516,
    -0.00000007691632689885176608733533,
    0.000001768712983627615502668705,
    -0.000003332634478885821970061722,
    -0.000008520602537446695943557963,
    0.0000374123788074003850337261,
    -0.000000153591712353472464462666,
    -0.0001986485523117479583352779,
    0.0002135815619103406995914207,
    0.0006284656829651457353447253,
    -0.001340596298336106575316284,
    -0.001118732666992497144092811,
    0.004943343605466737726572557,
    0.0001186300338581174621454747,
    -0.0130514809466120013103918,
    0.006262167954305707280593385,
    0.02667070592647059062985093,
    -0.02373321039586000213983397,
    -0.04452614190298232604847684,
    0.0570512477385368838023183,
    0.06488721621190544908142073,
    -0.1067522466598284924810258,
    -0.09233188415084628286599866,
    0.1670813127632574113246022,
    0.1495339755653777857880016,
    -0.2164809340051429831230934,
    -0.2936540407365587634913595,
    0.1472231119699281554069614,
    0.5718016548886513117366803,
    0.5718268077666072146669762,
    0.3146789413370317256557485,
    0.1035884658224235921331058,
    0.01928853172414637592857467,
    0.001576310218440760526140143,
];

pub(crate) const DB19: [f64; 38] = [
    0.0000000008666848838997618927339423,
    -0.00000001116402067035825892057899,
    0.0000000463693777578260454184811,
    0.0000000144708829879784452943586,
    -0.0000006862755657769142701927199,
    0.0000015319314766911930075793,
    0.000003010964316296526537502067,
    -0.00001664017629715494459756789,
    0.000005105950487073886231591171,
    0.00008711270467219922922740005,
    -0.0001246007917341587767617178,
    -0.0002606761356786279964711794,
    0.0007358025205054352212846736,
    0.000341808653458595750832677,
    -0.002687551800701582123409583,
    0.0007689543592575483763398858,
    0.007040747367105242883467131,
    -0.005866922281012174576753093,
    -0.01398838867853514217332034,
    0.01937554988917612741605723,
    0.02162376740958504850453892,
    -0.04567422627723091016482826,
    -0.02650123625012304126591367,
    0.08690675555581223177270545,
    0.02758435062562866746382895,
    -0.1427856950387365875254631,
    -0.03351854190230287716678603,
    0.2123497433062784822688229,
    0.0746522697081032637900222,
    -0.2858386317558262446070216,
    -0.2280913942154826345998231,
    0.2608949526510388472466673,
    0.6017045491275379021089975,
    0.5244363774646548792546241,
    0.2643884317408967676854559,
    0.08127811326545955616929007,
    0.01428109845076439704536497,
    0.001108669763181710597038654,
];

pub(crate) const DB20: [f64; 40] = [
    -0.0000000002998836489619319420215403,
    0.000000004056127055551832808810898,
    -0.00000001814843248299696039560292,
    0.0000000002014322023550512649008677,
    0.0000002633924226270001275048511,
    -0.000000684707959700055739991442,
    -0.000001011994010018886173539899,
    0.00000724124828767362047472712,
    -0.000004376143862183997145312315,
    -0.00003710586183394712838723786,
    0.00006774280828377730108869753,
    0.0001015328897367029093714783,
    -0.00038510474869921763147948,
    -0.00005349759843997694831437342,
    0.001392559619323136422402998,
    -0.000831562172822556929310811,
    -0.003581494259609622598378165,
    0.004420542387045790777566623,
    0.006721627302259457030497725,
    -0.01381052613715192008136956,
    -0.008789324923901560560057789,
    0.03229429953076957959812177,
    0.005874681811811826616376297,
    -0.0617228996246804578751366,
    0.005632246857307435586315059,
    0.1022917191744425607913271,
    -0.02471682733861358532978514,
    -0.1554587507072679453123953,
    0.0398502464577712017801403,
    0.2282910508199163246434438,
    -0.01672708830907700811030381,
    -0.3267868004340349630254536,
    -0.139212088011483881011543,
    0.3615022987393310405224156,
    0.6104932389385938629189354,
    0.4726961853109016842289236,
    0.2199421135513970337882483,
    0.06342378045908152184306772,
    0.01054939462495039885492343,
    0.0007799536136668462930551793,
];

pub(crate) const DB21: [f64; 42] = [
    0.0000000001038805571023706569502526,
    -0.000000001471954197650365308554027,
    0.000000007058033541231122196344296,
    -0.000000002254014974673330338014039,
    -0.0000001000400879030597288737442,
    0.0000002992136630464852643046471,
    0.0000003166095442367030537559366,
    -0.000003090017164545699348925361,
    0.000002790330539814487104734739,
    0.0000153548250927604914867642,
    -0.00003499665984987447618984047,
    -0.00003635520250086338135079439,
    0.000193664650416508054425746,
    -0.00003196406277680437208301226,
    -0.0006906711170821016243168144,
    0.0006394185005120302548939359,
    0.001716607040630624067545362,
    -0.00295837403893283107728096,
    -0.002891334348588901412280272,
    0.00898882438197191185880186,
    0.002403470920805434937750356,
    -0.02089205367797907983429262,
    0.003357756390338110727422638,
    0.03972683542785044458200971,
    -0.01865385920211851469852071,
    -0.06497750489373231574941059,
    0.04572340574922879180563839,
    0.09660039032372422229677511,
    -0.08177594298086382496038027,
    -0.1399404249325472138210102,
    0.1152332984396871040644328,
    0.2115645276808723884709451,
    -0.1123970715684509819043413,
    -0.3356640895305295080319752,
    -0.0357229196172552873611572,
    0.4445904519276003274974585,
    0.6015060949350038432825727,
    0.4196879449393627892206382,
    0.1813596254403815055677995,
    0.04924777153817727626261558,
    0.007776639052354783823717277,
    0.0005488225098526837517770582,
];

pub(crate) const DB22: [f64; 44] = [
    -0.00000000003602113484339554723475048,
    0.0000000005335938821667489819535292,
    -0.000000002729623146632975896535219,
    0.000000001680171404922988815765599,
    0.00000003761228749337362508520992,
    -0.0000001283336228751754529987231,
    -0.00000008779879873361286594720819,
    0.000001295182057318877548942357,
    -0.000001565179131995160230616669,
    -0.000006166729316467578080225576,
    0.00001737375695756189288867198,
    0.00001137434966212593223666445,
    -0.00009405223634815759790970408,
    0.00004345899904532003272172522,
    0.0003286094142136787078257998,
    -0.0004237873998391800622019543,
    -0.0007706909881231196590006816,
    0.001827010495657279114806171,
    0.001044260739186025303132377,
    -0.005455691986156717410150208,
    0.0003001373985076436217041274,
    0.01256472521834337344182053,
    -0.006213782849364658626700741,
    -0.02348000134449318779261695,
    0.02058670762756536001814034,
    0.03697084662069802241113337,
    -0.04653081182750671423997701,
    -0.05136425429744412990418212,
    0.08455737636682607305527171,
    0.06807631439273222062613655,
    -0.131768137686683411979871,
    -0.09711079840911471250386455,
    0.1799731879928913036437166,
    0.1640931881067664854789712,
    -0.2005684061048871036359031,
    -0.3127265804282962080584696,
    0.07372450118363015059141929,
    0.5079010906221639309876537,
    0.5784327310095244145671245,
    0.3677286834460374853605913,
    0.14836754089011142121457,
    0.03806993723641108329225347,
    0.00572185463133453951073415,
    0.0003862632314910982339779821,
];

pub(crate) const DB23: [f64; 46] = [
    0.00000000001250203302351040960147236,
    -0.0000000001932405111313417416751721,
    0.000000001050446453696543322060908,
    -0.0000000009472885901812051510237031,
    -0.00000001399935495437998914801125,
    0.00000005417549179539278430159537,
    0.00000001853091785633965126805685,
    -0.0000005339005405209421335093779,
    0.000000814757483477944745875487,
    0.000002397569546840240155483786,
    -0.000008347875567854625046418718,
    -0.000002635207889249186415011597,
    0.00004426071203109245929705959,
    -0.00003378894834120903765961597,
    -0.0001500218503490340993603014,
    0.0002567624520078737359110588,
    0.0003194204927099011459903921,
    -0.001061231228886651322199097,
    -0.0002465014005163511942933519,
    0.003122876449818145095510546,
    -0.001134865473356251640638104,
    -0.007075319273706152413405679,
    0.006031840650024163086317941,
    0.0127519439315282867575263,
    -0.01753710100303584526471035,
    -0.01852351365015615994313869,
    0.03849533252256919640954536,
    0.02176585683449997615790394,
    -0.07020739157490110682324769,
    -0.02112621235622724052971577,
    0.112297043618107286744312,
    0.02028307457564930069149334,
    -0.1640113215318759198879661,
    -0.0330374470942893794234152,
    0.223573658242040229637837,
    0.0921254070824180509857726,
    -0.2714020986078430341947865,
    -0.2613921480306440892071862,
    0.181392625363840015451089,
    0.5510185172419194143955679,
    0.5449311478735204827827943,
    0.3184508138528652221310722,
    0.1205155317839719381067809,
    0.02931000365788411637923971,
    0.004202748893183833392428461,
    0.0002719041941282888605324608,
];

pub(crate) const DB24: [f64; 48] = [
    -0.00000000000434278250380371010460337,
    0.00000000006991801157638230540819584,
    -0.000000000402465864458437968790294,
    0.0000000004748375824256231461909603,
    0.000000005157776789671999641894677,
    -0.00000002255740388176086217630813,
    -0.0000000005057645419792500369848139,
    0.0000002166339653278574544839071,
    -0.0000004032507756879971843328304,
    -0.0000008980253143938407242742985,
    0.000003901100338597702837581394,
    0.00000001341157750809114714150548,
    -0.00002022888292612697584043138,
    0.00002183241460466558197454738,
    0.00006559388639305634616152169,
    -0.0001460079817762616877490495,
    -0.0001181233237969554690808757,
    0.0005861270593183109858109736,
    -0.00004416184856141519847645693,
    -0.001696456818974824420909187,
    0.001153764936839481473548896,
    0.003736046178282523538144444,
    -0.004746568786323113880998292,
    -0.006291435370018187700491552,
    0.01304997087108573580738202,
    0.007661721881646586275460553,
    -0.0282131070949018895877014,
    -0.004944709428125628088157573,
    0.05130162003998087888456681,
    -0.004578436241819221728943656,
    -0.08216165420800167207282527,
    0.02098011370914481393823436,
    0.1210163034692242345347069,
    -0.03877717357792001551253236,
    -0.1711753513703468954076925,
    0.04252872964148383255755803,
    0.2392373887803108667426955,
    0.004776613684344728320840812,
    -0.3179430789993627493039696,
    -0.1872714068851562274620193,
    0.2809855532337118821928357,
    0.5749392210955419635354247,
    0.5043710408399250111344259,
    0.2729089160677263259380254,
    0.09726223583362519908845911,
    0.0224823399497164101712432,
    0.003082081714905494582157353,
    0.0001914358009475513645609307,
];

pub(crate) const DB25: [f64; 50] = [
    0.000000000001509692082823910834336202,
    -0.00000000002527625163465644749218932,
    0.0000000001535901570162657213875756,
    -0.0000000002228474910228168892365298,
    -0.000000001880415755062155402904549,
    0.000000009279224480081372069607723,
    -0.000000002611598556111770688217208,
    -0.00000008656941732278506864787382,
    0.0000001922806790142371679676537,
    0.0000003212037518862518884342114,
    -0.000001779201332653634584402046,
    0.0000005232827708153076466272629,
    0.000008990661393062588307512409,
    -0.00001277195293199783732141471,
    -0.00002733048119960041716998596,
    0.00007904640003965527988126494,
    0.00003543714523276059121014228,
    -0.0003098800990984697809396686,
    0.0001153212440466300480737191,
    0.0008772581936748274867785002,
    -0.0008999774237462950443253162,
    -0.001842484290203331336391313,
    0.003322707773973191790889414,
    0.002726936258738495589409867,
    -0.008860702618046369105631044,
    -0.001989425782202736570775103,
    0.01892280447662762765670408,
    -0.003079836794847036571948218,
    -0.03404232046065334277296088,
    0.01554260592910229089869123,
    0.05361790939877950079583968,
    -0.03717396286112251146960261,
    -0.07708411105657420048231643,
    0.0667521644940186065220189,
    0.1066338050184779534523827,
    -0.09850861528996021632131885,
    -0.150560213750579624525372,
    0.1181552867199598538805461,
    0.2245378197451017021624153,
    -0.08758761458765465524045624,
    -0.3364730796417461089475864,
    -0.09717464096463813982840207,
    0.3678850748029466877220273,
    0.581636896746057785456685,
    0.4596834151460946205070002,
    0.2316935078860218322205355,
    0.07803586287213266914353227,
    0.01718674125404015540219405,
    0.002256959591854779383773844,
    0.0001348029793470189013210314,
];

pub(crate) const DB26: [f64; 52] = [
    -0.0000000000005251871224244434747045388,
    0.00000000000913051001637179661619993,
    -0.00000000005840408185341170879233709,
    0.0000000001002303191046526898712638,
    0.0000000006780047245828636659159203,
    -0.000000003776010478532324071323193,
    0.00000000216932825985032300975401,
    0.00000003407795621290729824109049,
    -0.00000008904466370168590123977144,
    -0.000000107900423757867144696374,
    0.0000007939210633709952389050891,
    -0.0000004650463220640262650140695,
    -0.00000388740016185679530992406,
    0.000007000078682964987018952016,
    0.00001074221540872195013714176,
    -0.000041096739963914775386946,
    -0.000005277795493037869315161147,
    0.0001574795238607493499949364,
    -0.0001060574748283803952000892,
    -0.0004319557074261807659738832,
    0.0006161382204574344413627873,
    0.0008383488056543616281229836,
    -0.002145530281567620874833002,
    -0.0009390582504738289541107443,
    0.005601947239423804916769178,
    -0.0005287383992626814611937025,
    -0.01178549790619302928273981,
    0.005829580555318888100690966,
    0.0207349201799638255261371,
    -0.01776090356835818492853285,
    -0.03137811036306775713811135,
    0.03853571597111186269879468,
    0.04223218579637203623500241,
    -0.06865475960403591426661762,
    -0.053448561681483194862885,
    0.1064824052498086343065964,
    0.06982318611329237090235011,
    -0.1479771932752544927325289,
    -0.1043239002859270431189387,
    0.182755409589672374037761,
    0.1812918323111226970301146,
    -0.1748399612893924981449345,
    -0.3263845936917800227838882,
    0.001774076780986685777236067,
    0.4391583117891662557674692,
    0.5736690430342222812853947,
    0.4132929622783563794463646,
    0.1950394387167700971374984,
    0.06227474402514960455379267,
    0.01309755429255850082970181,
    0.001650520233532988241889616,
    0.00009493795750710592724723458,
];

pub(crate) const DB27: [f64; 54] = [
    0.0000000000001828188352882424909827992,
    -0.000000000003295790122476585886433078,
    0.00000000002213662088067662625114819,
    -0.00000000004374986224293654362229733,
    -0.0000000002415526928011130869689842,
    0.000000001521614984778521830614511,
    -0.000000001309465606856955120379795,
    -0.00000001321332273990056485777525,
    0.00000004026255052866908602023861,
    0.00000003286558968055159531538697,
    -0.000000347246814739438930650674,
    0.0000003050880686251999091171633,
    0.000001634369624725637775786505,
    -0.000003657500908187104958599507,
    -0.000003901164070638425164505581,
    0.00002063442647736885444389662,
    -0.000003517483614907445298533193,
    -0.00007711145517797583759898872,
    0.00007660058387068577302140421,
    0.000201971987969032682830664,
    -0.0003879018574101327594336186,
    -0.0003418351226915427665611902,
    0.001301177450244135093415654,
    0.0001457529625931728645745616,
    -0.003332854469520006319288585,
    0.001342626877303679548344983,
    0.006856635609684880519609784,
    -0.005862096345462926294533901,
    -0.0115771864589762820546559,
    0.0156655956489245781759756,
    0.01614696692239566550020058,
    -0.03273906663102087166716814,
    -0.01851249356199807793998957,
    0.05796940573471798946458833,
    0.01731101826549371128227683,
    -0.09102290652956591954225729,
    -0.01406275155580876540239998,
    0.1311979717171553316834576,
    0.0157993974602404843587955,
    -0.1780317409590085886428312,
    -0.03878641863180230797691905,
    0.2272732884141708264991166,
    0.1148230195177853546484315,
    -0.248264581903260561634994,
    -0.2897168033145948728979135,
    0.1028408550618229166939699,
    0.4934061226779989928203918,
    0.5538498609904800584757822,
    0.3671102141253897999106925,
    0.1629220275023933184321834,
    0.04945259998290488234751194,
    0.009952588780876620369597596,
    0.001205531231673213302807435,
    0.00006687131385431931455357729,
];

pub(crate) const DB28: [f64; 56] = [
    -0.00000000000006367772354714857174852578,
    0.000000000001188850533405901501795317,
    -0.000000000008365490471258800628910072,
    0.00000000001867367263783390575772362,
    0.00000000008492220011056382286332114,
    -0.0000000006077041247229010627624161,
    0.0000000006944540328946226814687647,
    0.000000005044047056383436807511786,
    -0.00000001784138690875709975109486,
    -0.00000000826238731562655764827674,
    0.0000001490660013535362227310709,
    -0.0000001757461173209842654152038,
    -0.0000006670215479954892885320174,
    0.000001840363734517769154117278,
    0.00000124790031757483418070121,
    -0.00001004326041333422598429356,
    0.00000463866498139429476007178,
    0.00003641401211050802487392136,
    -0.00004907713416190250546805932,
    -0.00008903901490044487717495647,
    0.0002295790982233456272582073,
    0.0001154656063658921285892262,
    -0.0007486749559114630036410487,
    0.0001415672393140464391247946,
    0.001875998668202795644291414,
    -0.001360373845639692392747722,
    -0.003725461247074254942518445,
    0.004784863112454241541871003,
    0.005838816627748944984577228,
    -0.01206359196821849000258453,
    -0.006815549764552309222609416,
    0.0246880600101518667133238,
    0.004431732910062988368971038,
    -0.04333336861608628326480996,
    0.003448018955540951228228019,
    0.06774789550190933595796849,
    -0.01734192283130589831707802,
    -0.09768535580565243514605811,
    0.03447863127509970260220484,
    0.134627567910226092484649,
    -0.04683823374455167720675774,
    -0.1828773307329849273639155,
    0.03690688531571127001251753,
    0.2458081513737595535928904,
    0.03285787916338710201724638,
    -0.3013278095326417660437812,
    -0.2304989540475825271492738,
    0.200176144045984438779584,
    0.5305162934414857645037955,
    0.5249982316303355434072841,
    0.3225633612855224319204694,
    0.1351379142536410504771283,
    0.03909260811540534591435048,
    0.007542650377646858798896812,
    0.0008794985159843869866602706,
    0.0000471080777501405105174917,
];

pub(crate) const DB29: [f64; 58] = [
    0.00000000000002219191311588303034881629,
    -0.0000000000004285654870068344348184642,
    0.00000000000315276241337031049512791,
    -0.000000000007832509733627817670955247,
    -0.00000000002940589250764532894513971,
    0.0000000002407099453509342722089605,
    -0.000000000342680086326308906760986,
    -0.000000001893995386171984121467265,
    0.000000007768978854770061733773712,
    0.000000001076591906619196131950008,
    -0.00000006286156922010785972758677,
    0.00000009387197411095863610151085,
    0.000000263389838699769677773726,
    -0.0000008975701750636280653873307,
    -0.0000003029054592052818185320454,
    0.000004750609246452552516376804,
    -0.000003593644804025187470923608,
    -0.00001657328395306616419758658,
    0.00002913344750169041133341062,
    0.00003645026068562775244108476,
    -0.000129304484008072072872414,
    -0.00002292018041214499853540365,
    0.000411128345474276706960487,
    -0.0002000711363076779702400293,
    -0.001000778327085680499686227,
    0.001087053942226062948350762,
    0.001877120925723650213604032,
    -0.003473798989681100689991267,
    -0.002550807127789472567719331,
    0.008469725493560752160870919,
    0.001737880332720511105532024,
    -0.01704122457360669057324642,
    0.002648327307678167898824517,
    0.02947043187174764114488745,
    -0.01291714255426679516802757,
    -0.04518798127778834300416477,
    0.03053154327270413484485267,
    0.06347916458421186403082714,
    -0.05502748952532572623841389,
    -0.08512549261563549796161254,
    0.08322074716244975967072151,
    0.114472295893818257206398,
    -0.1078459499387214165500026,
    -0.1608779885941877263455524,
    0.1124191748731883794265585,
    0.2361052361530259491306794,
    -0.05570680007294085550606511,
    -0.3300409489175880617395364,
    -0.1540287344599000629585817,
    0.2891052383358291844039911,
    0.5513744327583751658750089,
    0.4897588047621992957125769,
    0.2806534559709829568241446,
    0.1113701169517405248354791,
    0.03077358022140837603974894,
    0.005702126517773375459496865,
    0.0006409516803044434853781075,
    0.00003318966279841524942518724,
];

pub(crate) const DB30: [f64; 60] = [
    -0.000000000000007737942630954404931864862,
    0.0000000000001543997570847619966016727,
    -0.000000000001185237592101582248076293,
    0.000000000003239428638532285944278728,
    0.00000000001000105131393171234745879,
    -0.00000000009461387997276802590282704,
    0.0000000001613622978270904242784174,
    0.0000000006984862691832182515644681,
    -0.000000003331105680467578188728516,
    0.0000000005553397861397054136068944,
    0.00000002605442754977625363929726,
    -0.00000004764379965139453336499299,
    -0.0000001000414682354500850825581,
    0.0000004261662326011572296221349,
    0.00000001099474338526203314300313,
    -0.000002187267676996166502443068,
    0.000002327549098493686553074371,
    0.000007252145535890468897683922,
    -0.00001636152478725426593860783,
    -0.00001339716863293971694365541,
    0.00006982008370808327670647975,
    -0.000008548305467584070292176059,
    -0.0002161718301169633692573879,
    0.0001724825842351709632039453,
    0.0005050948239033467915271025,
    -0.0007678782504380918640454756,
    -0.0008609276968110423982824542,
    0.002324520094060099177635248,
    0.0008433845866620934446367119,
    -0.005530730148192003134410832,
    0.0006196717564977244048843308,
    0.01091563165830489005869719,
    -0.005296859666131087038265512,
    -0.01839974386811734155533493,
    0.01528796076985739632592143,
    0.02707861959529418369174714,
    -0.03226375891935220896478143,
    -0.03567339749675960819397247,
    0.05671236574473569741483558,
    0.04380166467141773101179325,
    -0.08765869003638365741792882,
    -0.05380646545825707588450726,
    0.1227477460450093760258028,
    0.07277865897036442377476817,
    -0.157236817959993807614083,
    -0.1145582194327077751871968,
    0.1778298732448367336367312,
    0.1994621215806643144130561,
    -0.1419685133300829238400809,
    -0.3329669750208555933923549,
    -0.06618367077593731440110503,
    0.3662426833716279639396873,
    0.557572232912836418528002,
    0.4504878218533178158011765,
    0.2420206709402140943243609,
    0.09123830406701570472360885,
    0.02413083267158838002286458,
    0.004300797165048069262138775,
    0.0004666379504285509088705453,
    0.00002338616172731421491296291,
];

pub(crate) const DB31: [f64; 62] = [
    0.000000000000002699382879762665643783326,
    -0.00000000000005559442050579014649731359,
    0.0000000000004445467096291932260545615,
    -0.000000000001324334917243963087664869,
    -0.000000000003327008967125979892770668,
    0.00000000003692108808871129640526054,
    -0.00000000007348930032486264164782088,
    -0.0000000002524043954153353078925855,
    0.000000001408568151025177517379163,
    -0.0000000006474311687959861415151628,
    -0.00000001061529602150252311473062,
    0.00000002328309713821409684140077,
    0.00000003616826517331004659928958,
    -0.0000001975925129170206239574839,
    0.00000005327250656974915286552064,
    0.0000009810015422044372167796351,
    -0.000001369060230942940680244082,
    -0.000003035142365891509596864976,
    0.000008795301342692987605427664,
    0.000004034520235184278691886652,
    -0.00003631255157860086203334624,
    0.00001501335727444532918925003,
    0.0001089584350416766833375554,
    -0.0001243411617250228670076423,
    -0.0002396583469402949488537974,
    0.0004998816175637222540897864,
    0.0003431398296904734522214109,
    -0.00145904174198516092646194,
    -0.00006397901106014600906921747,
    0.003393066776715931726765563,
    -0.001428264223218909988524783,
    -0.006520852375874612409656361,
    0.005516163573310992572495959,
    0.0105176394873718413031094,
    -0.01390055293926652918434783,
    -0.01427627527776352024668771,
    0.02804761936675616990077842,
    0.01615417156598591280625143,
    -0.04861907546485433329053194,
    -0.01488002661810482185611448,
    0.07535361174328140954070676,
    0.0109412974523649692698557,
    -0.107612773323495627963986,
    -0.008139832273469236462171139,
    0.1450895009319931872049381,
    0.01543698842948893444615432,
    -0.1869623608957154403675816,
    -0.04992634916046823773116969,
    0.2249667114737370909871572,
    0.1401782887652732734196093,
    -0.2179784855235633589387589,
    -0.3109551183195075063636637,
    0.0271692124973694631995258,
    0.4294688082061373091136147,
    0.5511398409142754806211428,
    0.4091922000374278445278264,
    0.2070128744852353375183185,
    0.07433609301164788296656383,
    0.01885369161298591431097371,
    0.003236884068627721329491909,
    0.0003394122037769956934730176,
    0.00001648013386456140835865242,
];

pub(crate) const DB32: [f64; 64] = [
    -0.0000000000000009421019139535078861868502,
    0.00000000000002000715303810525032407218,
    -0.0000000000001663800489433402271956242,
    0.0000000000005361482229611802084581105,
    0.000000000001075610653501062207762908,
    -0.00000000001430918765169202358627079,
    0.0000000000326327074133290788469937,
    0.00000000008904723796221605750271322,
    -0.0000000005881091462634605505062304,
    0.0000000004384387799940474341817957,
    0.000000004250422311980592617514981,
    -0.00000001104383021722648951712971,
    -0.00000001219924359483373146261486,
    0.00000008965966311957728752286698,
    -0.00000005003361868748230137563904,
    -0.000000428597069315145723598237,
    0.0000007560047625595948139098001,
    0.000001202889036321620941691985,
    -0.000004558309576264423412968185,
    -0.0000006361781532260255471610444,
    0.00001824268401980691365520462,
    -0.00001294045779405512746826346,
    -0.00005259809282684323108059826,
    0.00008103678329134838317221456,
    0.0001053915461739828116766171,
    -0.0003059654423826911910297421,
    -0.0001024537310607396173615588,
    0.0008673058518450555039180916,
    -0.0002211678729579097944010074,
    -0.001964740555821778335982009,
    0.001468955100468467833696451,
    0.003627224640687864813670682,
    -0.004649216751184411834663113,
    -0.005411568257275791229976569,
    0.01101740071540688141460418,
    0.006167527310685675008550266,
    -0.02166282283639119413121144,
    -0.0041459076608272183578352,
    0.03705145792354468115004096,
    -0.002380264464932573768157775,
    -0.05692631406247843778301032,
    0.01410615151610660790437723,
    0.08087414063848395728850704,
    -0.0296278725084477036200159,
    -0.109456113116089381875895,
    0.04440490819993973825585698,
    0.1452320794752866572885353,
    -0.04899511718467174092861427,
    -0.1921023447085468960349175,
    0.02466244483969740400319814,
    0.2483106423568801623957825,
    0.06471335480551623775546943,
    -0.2774215815584272215588157,
    -0.2666981814766755665147002,
    0.1206305382656178287748006,
    0.4778091637339483832569442,
    0.5343179193409538507708589,
    0.3675096285973496468280075,
    0.1757507836394389122425252,
    0.06025749912033537269984151,
    0.01468104638141913553806006,
    0.002431261919572266089195622,
    0.0002466566906380903280264494,
    0.00001161463302135014899170787,
];

pub(crate) const DB33: [f64; 66] = [
    0.0000000000000003289373678416306188058474,
    -0.000000000000007196510545363322279314991,
    0.00000000000006214740247174397703065745,
    -0.0000000000002152488386833302602266296,
    -0.0000000000003343481218953278831314264,
    0.000000000005509414720765524664037991,
    -0.00000000001420236859889936732632606,
    -0.0000000000304957445394586353144652,
    0.0000000002426833102305682143082949,
    -0.0000000002496402105246193819041739,
    -0.00000000167139267725193240179338,
    0.000000005111211857347454066054746,
    0.000000003672863576838181409507621,
    -0.00000003987838198518880585825735,
    0.00000003377972703730854328726943,
    0.0000001822443332571053541667374,
    -0.000000398579129198594421586724,
    -0.0000004426923407952870364895793,
    0.000002288371276141527313284897,
    -0.0000003607516102879771877010235,
    -0.00000886612136675773652701258,
    0.000009070805757828453346272579,
    0.00002423335398816890291751568,
    -0.0000492956442341730154046292,
    -0.00004160438516273709600975031,
    0.0001780431898251245482513172,
    0.000004393166251766185561406994,
    -0.0004908329007590351428236275,
    0.0002727305847336937015719383,
    0.001074380696351291296017361,
    -0.001204309257604658936827158,
    -0.001860718214455795924133774,
    0.003480800953405712057364685,
    0.0023890624081659085804763,
    -0.007953540387057939781145777,
    -0.00159428878241460480515157,
    0.01531695411585766615492066,
    -0.00216775861735360713539178,
    -0.02572876175473297333251566,
    0.01070326582001954879297401,
    0.03868706076024496648413376,
    -0.02524858297747649762965416,
    -0.0534712513358222910064832,
    0.04573456189389667886358026,
    0.07019114394099652820546709,
    -0.07030248505405616021857185,
    -0.09114696835133148655749835,
    0.09478808805061596232111043,
    0.1219678564037346146786689,
    -0.1108441331167107912758496,
    -0.1714280990518593228433275,
    0.09985155868033815385054197,
    0.2454206121192791245633202,
    -0.01927833943695276067153976,
    -0.315997410766560238304379,
    -0.2042026223985421162776532,
    0.2095823507130554208544027,
    0.5112547705832675148940325,
    0.5093761725149396069056706,
    0.3267181301177075614106116,
    0.1481863131800528199377709,
    0.04861466653171619273221538,
    0.01139594337458160917819772,
    0.001822709435164084285432851,
    0.0001791016153702791526437094,
    0.000008186358314175091308484596,
];

pub(crate) const DB34: [f64; 68] = [
    -0.0000000000000001148944754480590039031353,
    0.000000000000002587338381935699639649417,
    -0.00000000000002317083703906408416514516,
    0.00000000000008579194051799733204270696,
    0.0000000000000979945115821159831199953,
    -0.000000000002107879108915301737359535,
    0.000000000006080125354000167495232212,
    0.00000000001004208735461769836994357,
    -0.00000000009904774537632409447931764,
    0.0000000001300410318609415286707265,
    0.000000000644637821032340188670009,
    -0.000000002316501946995482954535953,
    -0.0000000008665744261368721753158423,
    0.00000001740423332936068133753815,
    -0.00000001990346501531736888468443,
    -0.00000007526701740412589468428477,
    0.0000002025990666667859253143735,
    0.0000001448195708333185021482405,
    -0.000001116306534817008377406746,
    0.0000004979718101421308111754387,
    0.000004169871758547028198107869,
    -0.000005710826510998303976709891,
    -0.00001057657494257950567587666,
    0.00002844951419697807522822021,
    0.00001353117227249649634403944,
    -0.00009914697770780134581346255,
    0.00002660050018453441884576718,
    0.0002650772397558057678901289,
    -0.0002326732140233531576783976,
    -0.0005527355762144197650828636,
    0.0008751999064078689076137674,
    0.0008589959874363661644636192,
    -0.002399453943537055954082771,
    -0.0007692127975067837228340117,
    0.005334950768759935679774742,
    -0.0006194748845153873239091635,
    -0.0100455067083615196682489,
    0.004713649260999809749439482,
    0.01640937419986519124615043,
    -0.0131439800166571613138089,
    -0.02367173792282636565764697,
    0.02722835075635419641026935,
    0.03073974657395934367842827,
    -0.04743855964527775997963133,
    -0.03701283841786245226712637,
    0.07318523543679560094954439,
    0.04357609464963129591863478,
    -0.1029475969928140832720942,
    -0.05448296806413904791455138,
    0.1341259602711361298421622,
    0.07799184693794811162881331,
    -0.1609249271778668000099088,
    -0.1273373582238011558764867,
    0.1666017504122074555095168,
    0.2169072201874275851452012,
    -0.1038919155156404761086719,
    -0.3315253015083869381207649,
    -0.1282468421744371589454659,
    0.2903663295072749783720667,
    0.5305550996564631915930477,
    0.4784787462793710366426581,
    0.2877650592337145374344232,
    0.1241524821113768051183968,
    0.03904884135178594145587638,
    0.008819889403884978440473219,
    0.001364061390059049909406763,
    0.0001299476200679530052146254,
    0.000005770510632730285215433695,
];

pub(crate) const DB35: [f64; 70] = [
    0.00000000000000004014628712333488550001592,
    -0.0000000000000009298012529324184570514536,
    0.000000000000008624037434720088562091692,
    -0.00000000000003397720856796267522297171,
    -0.00000000000002597954328893848224740151,
    0.0000000000008015088533687901083321636,
    -0.000000000002567065476155081489153459,
    -0.00000000000312563935710855756644029,
    0.00000000004000536627253744522896324,
    -0.0000000000640793825650188927997253,
    -0.0000000002433545573751673068862748,
    0.000000001030823345485433294312353,
    0.00000000005897951310384361704695506,
    -0.000000007458116552893037333858846,
    0.00000001084902733789934821546084,
    0.00000003008188650719067066469903,
    -0.00000009990396944534901169972788,
    -0.00000003700308378205124689578191,
    0.0000005302368616904760698972134,
    -0.0000003903931733287306407226606,
    -0.000001895929617693153210566232,
    0.000003353345862871310041728075,
    0.000004308047861716731284534125,
    -0.00001572442077270281725180114,
    -0.000002437001526827790000908356,
    0.0000530414312291330999676528,
    -0.00002976995962848509670096477,
    -0.0001365883072261161708740862,
    0.0001700012283661248935293792,
    0.0002648328819961289111450942,
    -0.0005864810318991817801245747,
    -0.000334669216425085484876295,
    0.001549637469702362917861604,
    0.000007615969435172736903447935,
    -0.003357644380922383386262053,
    0.001428088794070762152996212,
    0.006137754586740521225984857,
    -0.005085991649233429813536933,
    -0.009577797899235709205845168,
    0.01228943600811871136868625,
    0.01276645671565674461378492,
    -0.02416949780166026753858155,
    -0.01436683978422007186559473,
    0.04125469306470509051054663,
    0.01322854958503655482815464,
    -0.06335603744044346341546259,
    -0.009318558949903923971369579,
    0.08991354757072954340113569,
    0.004734229172641948868438533,
    -0.1205855226433935611929371,
    -0.004752680834111350748061309,
    0.1552924803962371091969885,
    0.01930954466601834951244854,
    -0.1919195892985939566610654,
    -0.06526287131067753932711639,
    0.217299289321089300619505,
    0.1660413574907809164393768,
    -0.1817869767667278368961092,
    -0.3238228649121161484281117,
    -0.04388388187393404277214515,
    0.3603456405180473498539584,
    0.5370084275091661085710371,
    0.4435927392240354150132475,
    0.2513073789944932912021613,
    0.1034044558614783809735727,
    0.03123628851149071530834966,
    0.006807292884319132188208901,
    0.001019122680375098184690774,
    0.00009421469475576740501814726,
    0.000004067934061148558824217748,
];

pub(crate) const DB36: [f64; 72] = [
    -0.00000000000000001403274175373190690671228,
    0.0000000000000003339971984818692996231827,
    -0.000000000000003204628543401749697842739,
    0.0000000000000133807138629910589585576,
    0.000000000000005542263182639804367929857,
    -0.0000000000003029285026974877218794043,
    0.000000000001070969357114017071111361,
    0.0000000000008876846287217374602031622,
    -0.00000000001599716689261357036904012,
    0.00000000003037429098112535036112557,
    0.00000000008962418203859612484205003,
    -0.0000000004512545778563249431516882,
    0.0000000001090815553713751815581214,
    0.0000000031388416957824240322457,
    -0.000000005612784343327791058829801,
    -0.00000001156093688817008457124683,
    0.00000004799043465450992303979232,
    0.000000002753249073339512152724395,
    -0.0000002455377658434232693151361,
    0.0000002548423522556577636902339,
    0.0000008311421279707778991704915,
    -0.000001870811602859180772037034,
    -0.000001586145782434577450925096,
    0.00000837221819816078825793066,
    -0.000001183471059985615927284946,
    -0.00002731390824654337753409072,
    0.00002375106683660860830355384,
    0.00006694741196930589928991429,
    -0.0001131899468084665658779153,
    -0.0001155118895843527135423173,
    0.0003693507284967510479606334,
    0.00008614565758992701939057712,
    -0.0009463403823261101657088323,
    0.0002776812795712026138948703,
    0.001990793771851737288536288,
    -0.001503074066296643815712764,
    -0.003484541445404883402287011,
    0.004413484835350575674617346,
    0.005022989106665829220355057,
    -0.009990263473281371653378358,
    -0.005657813245058818107935394,
    0.01906359478062535917075593,
    0.003984040198717004981066037,
    -0.0319807206776396985015154,
    0.001424972661765391661325975,
    0.04851308354780908826953123,
    -0.01131910031681742853648664,
    -0.06820901663681751270207343,
    0.02503872144956848996844023,
    0.09115678225801654432913779,
    -0.03988085357551317267077451,
    -0.1188037543101356369179555,
    0.05027618007353842899398444,
    0.1541062366276428896583184,
    -0.04586140074639271507761507,
    -0.1993372056086496202365055,
    0.00727851509579222934187559,
    0.2465372776089742035132701,
    0.09811420416311476822013304,
    -0.2468070369781255324337366,
    -0.2944210395891145859437188,
    0.04397519752934862802273841,
    0.4178753356009697883521881,
    0.5322668952607286785294605,
    0.4064336977082553259421616,
    0.217756953097900801674669,
    0.0856520925952640871381405,
    0.02489056564482796524151453,
    0.005240297377409884257981609,
    0.0007602151099668488440364023,
    0.00006826028678546358196676386,
    0.000002867925182755946172577901,
];

pub(crate) const DB37: [f64; 74] = [
    0.000000000000000004906615064935203421820359,
    -0.0000000000000001199280335852879554682917,
    0.00000000000000118901238750825279807135,
    -0.000000000000005243025691884205619678979,
    -0.0000000000000004518889607463726818303783,
    0.0000000000001138052830921439711800058,
    -0.000000000000442161240987210561494192,
    -0.0000000000002096363194234800632650728,
    0.000000000006334955440973913498875984,
    -0.00000000001398415715537641430690176,
    -0.00000000003203398244123241681886288,
    0.0000000001946164894082314989674362,
    -0.0000000001031411129096975017902534,
    -0.000000001297205001469435041094211,
    0.000000002793974465953982805822244,
    0.000000004224485706362418947345213,
    -0.00000002252193836724805660599012,
    0.000000005350657515461434434908483,
    0.0000001109031232216439385202209,
    -0.000000150988538867158365294196,
    -0.0000003494948603445727801288401,
    0.000001002121399297177614000961,
    0.0000004854731396996411909740125,
    -0.000004309941556597092574823135,
    0.000001849945003115590295357279,
    0.00001354327718416781737166121,
    -0.00001639162496160583197351256,
    -0.00003098662927619930243300014,
    0.00007055138782065465525260295,
    0.00004336726125945695309435099,
    -0.0002208944032455493816299863,
    0.00001534439023195503370034648,
    0.0005490532773373631202432077,
    -0.0003280788470880198308410325,
    -0.001111484865318630157679514,
    0.001263934258117477239455329,
    0.001816871343801423595645805,
    -0.003394523276408398758385854,
    -0.0022480531870038246086696,
    0.007387757452855583766015979,
    0.001519305778833399123151082,
    -0.01376398196289478452480903,
    0.001690472383484423841634725,
    0.02261865154459947319098845,
    -0.008833493890410232945997748,
    -0.03352358406410096969274548,
    0.02097280059259754719791502,
    0.04580794415126833440954357,
    -0.03825382947938425065581569,
    -0.05925681563265897122683157,
    0.0595674108715299535643517,
    0.07504761994836017802157357,
    -0.08233021190655741283759284,
    -0.09660754061668438974486151,
    0.1017802968388141771072242,
    0.1299296469598537617784473,
    -0.1084517138233017791160151,
    -0.1819622917786080096291812,
    0.08180602838721862113402494,
    0.2515232543602686776651467,
    0.01967150045235939101462286,
    -0.294375915262661769222774,
    -0.2461804297610834246778921,
    0.1308789632330201735399555,
    0.4622075536616057078731501,
    0.5181670408556229290297779,
    0.3684409724003061548103233,
    0.1873263318620649320322968,
    0.07058482597718160334032689,
    0.01976228615387959006155505,
    0.004024140368257286479169998,
    0.0005662418377066723556428895,
    0.00004942343750628132298527082,
    0.00000202206086249839227304728,
];

pub(crate) const DB38: [f64; 76] = [
    -0.000000000000000001716152451088744212626721,
    0.00000000000000004304596839558790319172252,
    -0.0000000000000004405307042483461164523401,
    0.000000000000002045099676788988720366123,
    -0.0000000000000004563397162127373541964888,
    -0.00000000000004249817819571463163879054,
    0.0000000000001808661236274530606883929,
    0.00000000000002626496504065251951006061,
    -0.000000000002484789237563642744669075,
    0.000000000006291537317039508365820912,
    0.0000000000110169293459945451160061,
    -0.00000000008278256522538134399829844,
    0.00000000006732336490189308726055649,
    0.0000000005261132557357598661933703,
    -0.000000001349197753983448878556647,
    -0.000000001436329487795135751261783,
    0.00000001034704539274858520463744,
    -0.000000005424274800287298236716632,
    -0.00000004884757937459286623325857,
    0.00000008400351046895965722446177,
    0.0000001396377545508355348994299,
    -0.000000518773373887414487710631,
    -0.00000008487087586072592566006873,
    0.00000214996026993966525057392,
    -0.000001550844350118602598054751,
    -0.000006456730428469618992767549,
    0.00001037359184045599777893552,
    0.00001334176149921350406745823,
    -0.0000417514164854039789638758,
    -0.00001155409103833717241556142,
    0.0001262043350166170817966416,
    -0.00004555682696668419972858138,
    -0.000303102046072661174790086,
    0.0002817639250380670661380589,
    0.0005810759750532863915709059,
    -0.0009424614077227377482645632,
    -0.0008448626665537774943492977,
    0.002400697781890973221685659,
    0.000716982182106401912460858,
    -0.005071314509218348420827027,
    0.0005625715748403531521124044,
    0.009214785032197180328350505,
    -0.004131306656031089215297403,
    -0.01470188206539868244759894,
    0.01129049727868596496305198,
    0.02090464525565524298023057,
    -0.02311413402054931717777286,
    -0.02689149388089451600536428,
    0.04005498110511594711535821,
    0.03198987753153780672077389,
    -0.06176620870841315752430845,
    -0.03660510340287429636996208,
    0.08720439826203975342000518,
    0.04309589543304764153175412,
    -0.1147311707107443734532382,
    -0.05658645863072737924870381,
    0.1414147340733826752057212,
    0.08563812155615105337069792,
    -0.1599125651582443685683188,
    -0.1417956859730596097524113,
    0.1499851196187170221385543,
    0.2321259638353531107313188,
    -0.0622665060478243201358417,
    -0.3216756378089978829493134,
    -0.1828676677083359014552855,
    0.2130505713555785052282232,
    0.4933560785171007823102229,
    0.4965911753117180915673146,
    0.3307757814110146576958016,
    0.1600719935641106983492676,
    0.05788994361285925566162902,
    0.01563724934757215745406711,
    0.003083088119253751726439594,
    0.0004211702664727116343298952,
    0.00003576251994264023316904763,
    0.000001425776641674131755318632,
];

pub(crate) const SYM2: [f64; 4] = [
    -0.1294095225512603811744494,
    0.2241438680420133810259728,
    0.8365163037378079055752938,
    0.4829629131445341433748716,
];

pub(crate) const SYM3: [f64; 6] = [
    0.03522629188570953660274066,
    -0.08544127388202666169281917,
    -0.1350110200102545886963899,
    0.4598775021184915700951519,
    0.8068915093110925764944936,
    0.3326705529500826159985116,
];

pub(crate) const SYM4: [f64; 8] = [
    -0.0757657147895022132277462,
    -0.02963552764600249176436918,
    0.4976186676327749899796055,
    0.8037387518051320808788056,
    0.2978577956053060514029012,
    -0.09921954357663353258520801,
    -0.0126039672620313037539161,
    0.03222310060405146787161592,
];

pub(crate) const SYM5: [f64; 10] = [
    0.02733306834499876881849339,
    0.02951949092570626125003377,
    -0.03913424930231384362442606,
    0.1993975339768555968950648,
    0.7234076904040407920741132,
    0.6339789634567920637174852,
    0.01660210576451084813346286,
    -0.175328089908056224237493,
    -0.02110183402468904100079904,
    0.01953888273524982677575358,
];

pub(crate) const SYM6: [f64; 12] = [
    0.01540410932704482429924526,
    0.003490712084222162515316225,
    -0.1179901111485200254042429,
    -0.04831174258569805497104869,
    0.491055941927973733041948,
    0.7876411410286509960718449,
    0.3379294217281658327144258,
    -0.07263752278637658346403941,
    -0.02106029251237084799153774,
    0.04472490177078138466299238,
    0.001767711864254007741006009,
    -0.007800708325032380414220998,
];

pub(crate) const SYM7: [f64; 14] = [
    0.002681814568260147029111149,
    -0.001047384888679738086537195,
    -0.01263630340324056658273218,
    0.03051551316587788574475952,
    0.06789269350122056490450094,
    -0.04955283493704283230136514,
    0.01744125508683570685052496,
    0.5361019170905692306633096,
    0.7677643170048829311734274,
    0.2886296317506478746978083,
    -0.1400472404429336541417677,
    -0.1078082377032897125485655,
    0.004010244871522395167779835,
    0.01026817670846481623143475,
];

pub(crate) const SYM8: [f64; 16] = [
    -0.003382415951005002595457699,
    -0.0005421323318000106893478369,
    0.03169508781152599143142571,
    0.007607487324976608191921008,
    -0.1432942383512726628440955,
    -0.06127335906781107784304677,
    0.4813596512590533915895686,
    0.7771857516996280286243336,
    0.3644418948361789367595594,
    -0.05194583810788180073571073,
    -0.02721902991710348632196412,
    0.04913717967373028678691099,
    0.003808752013894489463071922,
    -0.0149522583370621991184903,
    -0.0003029205147241330812639124,
    0.001889950332767689184274433,
];

pub(crate) const SYM9: [f64; 18] = [
    0.001400915525914656231260818,
    0.0006197808889855070809441088,
    -0.01327196778181713380567819,
    -0.01152821020767918614319415,
    0.03022487885827518813483037,
    0.0005834627461249818310236411,
    -0.05456895843083335109686622,
    0.2387609146073051662556291,
    0.7178970827644124046627097,
    0.6173384491409341513208497,
    0.0352724880352710426894224,
    -0.1915508312972843349452871,
    -0.01823377077939550556982998,
    0.06207778930288574757001365,
    0.008859267493400266697184308,
    -0.01026406402763312048500338,
    -0.0004731544986800435421888175,
    0.001069490032908611915868745,
];

pub(crate) const SYM10: [f64; 20] = [
    0.0007701598091144598225786407,
    0.00009563267072285273078450441,
    -0.008641299277022150260980649,
    -0.001465382581304610513583442,
    0.04592723923109150858515887,
    0.01160989390371131806352707,
    -0.1594942788849106094647825,
    -0.07088053578323157228601765,
    0.4716906669384429100010319,
    0.7695100370210979367838742,
    0.3838267610670763262565418,
    -0.03553674047381958581615604,
    -0.03199005688242811392145285,
    0.04999497207737515627662641,
    0.00576491203358114967199208,
    -0.020354939812311110745488,
    -0.0008043589320164512960576106,
    0.004593173585311791947469788,
    0.00005703608361849500681471888,
    -0.0004593294210046520401924679,
];

pub(crate) const SYM11: [f64; 22] = [
    0.000171721950699348100215154,
    -0.00003879565573614803644381358,
    -0.001734366267297837757058948,
    0.0005883527353969824904898188,
    0.006512495674771520117696651,
    -0.009857934828789213398428182,
    -0.02408084159586357924666024,
    0.03703741597885818535559637,
    0.0699767996107329323922268,
    -0.02283265102256226151557449,
    0.0971983944589055224966507,
    0.5720229780100757928291459,
    0.7303435490883895811848713,
    0.2376899090492575188926756,
    -0.2046547944957882937331574,
    -0.144602343705311897316615,
    0.03526675956446461983252944,
    0.04300019068155132719625692,
    -0.002003471900108979292830296,
    -0.006389603666454665064522586,
    0.0001105350976426903063611674,
    0.0004892636102619029682637899,
];

pub(crate) const SYM12: [f64; 24] = [
    0.0001119671942465652805981811,
    -0.00001135392804152661244590128,
    -0.001349755755571578982913478,
    0.000180214090085217523591535,
    0.007414965517654315366841005,
    -0.001408909244329129026022874,
    -0.02422072267501340301069565,
    0.007553780611679315567725424,
    0.04917931829966119582499655,
    -0.03584883073695463644197724,
    -0.02216230617035130089852665,
    0.3988859723901920074211515,
    0.7634790977836405407840944,
    0.4627410312192864216703449,
    -0.07833262231631543542340319,
    -0.1703706972388496215625562,
    0.01530174062248015280170436,
    0.05780417944550474687638691,
    -0.002604391031331418914640152,
    -0.01458983644923353403724759,
    0.0003076477963105245317384505,
    0.00235029761418334749627577,
    -0.00001815807886263295894943702,
    -0.0001790665869750844743819091,
];

pub(crate) const SYM13: [f64; 26] = [
    0.00006820325263074354886166734,
    -0.00003573862364871594042430266,
    -0.001136063438927969006289076,
    -0.0001709428585295721342928098,
    0.007526225389968170166409612,
    0.005296359738721862223235928,
    -0.02021676813339546615435335,
    -0.01721164272630438622944971,
    0.01386249743583841071832133,
    -0.05975062771795646357749165,
    -0.1243624607515033873517225,
    0.1977048187712659653636888,
    0.6957391505615690652721713,
    0.6445643839011571270475476,
    0.1102302230212868724971639,
    -0.1404900931136755344146815,
    0.008819757670429852123649577,
    0.09292603089914397040864336,
    0.01761829688064504395066114,
    -0.02074968632552065365423252,
    -0.001492447274258728513796686,
    0.005674853760123338128682937,
    0.0004132611988416782087148362,
    -0.0007213643851363755484466448,
    0.00003690537342323894105266718,
    0.00007042986690696272806476613,
];

pub(crate) const SYM14: [f64; 28] = [
    -0.00002587909026540258485334856,
    0.00001121086580890323397620803,
    0.0003984356729760720689450675,
    -0.00006286542481474576319914528,
    -0.002579441725933762786475052,
    0.0003664765736599811884868767,
    0.01003769371767481774786395,
    -0.002753774791224789019474485,
    -0.02919621776405097543730255,
    0.004280520499000752189617517,
    0.03743308836282358185076881,
    -0.05763449835141096980060332,
    -0.03531811211510751909942489,
    0.3932015219620394345445359,
    0.7599762419611891543121832,
    0.4753357626343444738393976,
    -0.05811182331765857968022964,
    -0.1599974111465199090936023,
    0.02589858753105382173930153,
    0.06982761636182118781544483,
    -0.002365048836736658983794121,
    -0.01943931426362817559996638,
    0.001013141987184317606726246,
    0.004532677471946336569339852,
    -0.00007321421356689133875211479,
    -0.0006057601824664402653162286,
    0.00001932901696554898588731284,
    0.00004461897799148456220749373,
];

pub(crate) const SYM15: [f64; 30] = [
    0.000009712419737964492030299458,
    -0.000007359666798928679329745048,
    -0.0001606618663749955866192076,
    0.0000551225478556533649281763,
    0.001070567219462717387065167,
    -0.0002673164464720259261634719,
    -0.003590165447373622249803243,
    0.003423450736352420554814046,
    0.0100799770879066339023495,
    -0.01940501143094608478178208,
    -0.03887671687685496927659517,
    0.02193764271973721681824359,
    0.04073547969677049245823859,
    -0.04108266663546926087803747,
    0.1115336951425836358977486,
    0.5786404152151501774348209,
    0.7218430296363335781907521,
    0.2439627054321816589494577,
    -0.1966263587663165805823756,
    -0.1340562984562827613344372,
    0.068393310060510168319915,
    0.06796982904489571982242622,
    -0.008744788886485915932362829,
    -0.0171712527816445197467149,
    0.001526138278183265958809462,
    0.003481028737065999710229202,
    -0.0001081544016856574117143075,
    -0.0004021685376030732176981907,
    0.00002171789015080883340604739,
    0.00002866070852533231008767336,
];

pub(crate) const SYM16: [f64; 32] = [
    0.000006230006701237646779379083,
    -0.000003113556407613870406319611,
    -0.0001094314792955831214172732,
    0.00002807858212820692258446085,
    0.0008523547108065520817188397,
    -0.0001084456223076621615456484,
    -0.003880912252612220268723038,
    0.0007182119788254315359870035,
    0.01266673165987695814725939,
    -0.003126517172273630193649208,
    -0.03105120284364274996560427,
    0.004869274404814542241897976,
    0.03233309161058234710357838,
    -0.06698304907061910366326289,
    -0.03457422841769919360526489,
    0.397122933620398222682104,
    0.7565249878763846080411709,
    0.4753428060123471127360881,
    -0.0540406013874408064090862,
    -0.159592192185395795526124,
    0.03072113906329964147383235,
    0.07803785290354830381705448,
    -0.003510275068337091252632037,
    -0.02495275804631512625106826,
    0.001359844742480148466977857,
    0.006937761130811371290691167,
    -0.0002221164762103134791079886,
    -0.001338720606693643864627073,
    0.00003656592483330302872779335,
    0.0001654567957912395697608712,
    -0.000005396483179313487364874018,
    -0.00001079798210433086464027042,
];

pub(crate) const SYM17: [f64; 34] = [
    0.000004297343327338256072043303,
    0.000002780126693825943152477875,
    -0.00006293702597545908626030356,
    -0.00001350638339979910757966974,
    0.0004759963802631830594495168,
    -0.0001386423026810132778896503,
    -0.002741675975678181303222616,
    0.0008567700701928021691925984,
    0.01048236693301614751801557,
    -0.004819212803181353822940933,
    -0.03329138349230621670483659,
    0.01790395221438948852020962,
    0.1047546148421948886307476,
    0.01727117821060019287999771,
    -0.1185669326109985524704953,
    0.1423983504151138912238636,
    0.6507166292043823899259724,
    0.6814889953443169891982351,
    0.1805395845807440567569534,
    -0.1550760053497068884650419,
    -0.08607087472063264088829495,
    0.01615880872591856810806338,
    -0.007261634750933915551340046,
    -0.01803889724190138833231142,
    0.009952982523507613552938748,
    0.01239698836663430301677916,
    -0.001905407689856405452367957,
    -0.003932325279794941395705314,
    0.00005840042869518091845476872,
    0.0007198270642145453004253069,
    0.00002520793314067132170650387,
    -0.0000760712440560291824965291,
    -0.000002452716342574082648452294,
    0.000003791253194331624890873418,
];

pub(crate) const SYM18: [f64; 36] = [
    0.00000261261255645570225747116,
    0.000001354915761785124494138295,
    -0.00004524675787451530583736691,
    -0.00001402099257700279330218584,
    0.0003961684063793881438356213,
    0.00007021273458599636061540786,
    -0.002313871814486868657505054,
    -0.0004115211092058262199602235,
    0.009502164390909605233855885,
    0.001642986397208733806811774,
    -0.03032509108914364828813534,
    -0.005077085160416989707544665,
    0.08421992997007587015162706,
    0.03399566710354207097659042,
    -0.1599381486676970440663828,
    -0.0520291589804200692392293,
    0.4739690598957469556380252,
    0.7536291400999388029670797,
    0.4014838605676873397917772,
    -0.03248057329150484629843686,
    -0.07379920729088593441861735,
    0.02852959703874229761342875,
    0.006277944554132259663846583,
    -0.03171268473169946995863391,
    -0.003260744199977855639279767,
    0.01501235634421640982424556,
    0.001087784789568256704842829,
    -0.00523978968301397385027925,
    -0.0001887762394005706215655553,
    0.00142808632707994218543275,
    0.000047416145182283679654092,
    -0.0002658301102419810320099323,
    -0.000009858816030038168827619909,
    0.00002955743762087669001454796,
    0.0000007847298055848572732726357,
    -0.000001513153069232048472344337,
];

pub(crate) const SYM19: [f64; 38] = [
    0.000000548773276821851389005786,
    -0.0000006463651303333403712959341,
    -0.00001188051826983119620336859,
    0.000008873312173693282191612293,
    0.0001155392333358390790850608,
    -0.00004612039600171763136576862,
    -0.0006357645150042332831986479,
    0.000159158047679573735714406,
    0.002121425028183205283324415,
    -0.001160703257197034527761054,
    -0.005122205002569428061163632,
    0.00796843832063778353053359,
    0.01579743929576444861583882,
    -0.02265199337806638743037947,
    -0.04663598353477770915954293,
    0.007015573857219180783701441,
    0.008954591172977124436830331,
    -0.06752505804068399981045803,
    0.1090258250802208921259457,
    0.5781449453372967153645174,
    0.7195555257159845945809585,
    0.2582661692381038316221612,
    -0.1765968662509999310550104,
    -0.1162417301070013274949614,
    0.09363084341592178691062994,
    0.08407267627938502831021854,
    -0.01690823486113354882976752,
    -0.02770989693122367092440457,
    0.004319351874887416887050044,
    0.008262236955522642848363481,
    -0.000617922327789993534261105,
    -0.00170496026116131531744513,
    0.0001293076765060830205216115,
    0.0002762187768568196454903374,
    -0.00001682138702924259529431234,
    -0.00002815113866148874453252772,
    0.000002062317063229323712924453,
    0.00000175093679953049963156301,
];

pub(crate) const SYM20: [f64; 40] = [
    0.0000003695537474791266951413579,
    -0.0000001901567589227817173598606,
    -0.000007919361411893951459753363,
    0.000003025666063118536340927629,
    0.0000799296783571211420932189,
    -0.00001928412301016186511287118,
    -0.0004947310915655072999799495,
    0.0000721599119007366584757827,
    0.002088994708186674323837658,
    -0.0003052628318806568687875067,
    -0.006606585799120731290537702,
    0.001423087359619414346540809,
    0.01700404902327979708333787,
    -0.003313857384407232897706739,
    -0.03162943714548432170916983,
    0.008123228356394548432295209,
    0.02557934950956631866935415,
    -0.07899434492676140366890289,
    -0.02981936887124318078726681,
    0.4058314443632747824115942,
    0.7511627284288978880977051,
    0.471991475091105368937277,
    -0.05108834293600639392338808,
    -0.1605782984207248358489473,
    0.03625095165576087694867536,
    0.08891966802862600512547535,
    -0.00684370196697405492575532,
    -0.0353733367574638907238955,
    0.001938597067661973391474256,
    0.0121570409489874966160274,
    -0.0006111263859779793992214229,
    -0.003471647802925688908295728,
    0.0001254409172704125701774524,
    0.0007476108598012617086282012,
    -0.00002661555034277681017223486,
    -0.0001173913351662847509013529,
    0.000004525422210086227215187294,
    0.00001228725277837423197488296,
    -0.0000003256702642630827699391611,
    -0.0000006329129045042895181598212,
];

pub(crate) const COIF1: [f64; 6] = [
    -0.01565572813579199293321231,
    -0.0727326195125264501895046,
    0.384864846864857779173974,
    0.8525720202116003898495933,
    0.3378976624574818177215718,
    -0.0727326195125264501895046,
];

pub(crate) const COIF2: [f64; 12] = [
    -0.0007205494455203469757881285,
    -0.001823208870911032300488053,
    0.005611434819368834280017833,
    0.02368017194684777018687249,
    -0.05943441864643109195931459,
    -0.0764885990782807612120564,
    0.4170051844232390836353375,
    0.8127236354494135062154214,
    0.3861100668227628873729884,
    -0.06737255472372559450544571,
    -0.04146493678687177691921661,
    0.01638733646320364098492028,
];

pub(crate) const COIF3: [f64; 18] = [
    -0.00003459977319727278058467818,
    -0.00007098330250637900379773876,
    0.0004662169598204028817152456,
    0.001117518770830630298745989,
    -0.002574517688136797235326503,
    -0.00900797613673062422257054,
    0.01588054486366945183828392,
    0.03455502757329773771965975,
    -0.08230192710629982699721552,
    -0.07179982161915483829250917,
    0.4284834763773699983779863,
    0.793777222626087186618804,
    0.4051769024091182447300241,
    -0.06112339000297255242610817,
    -0.06577191128146936405229894,
    0.02345269614207716804554771,
    0.007782596425672746315305162,
    -0.003793512864380801929975462,
];

pub(crate) const COIF4: [f64; 24] = [
    -0.000001784990914493346853870884,
    -0.000003259647940030751042125119,
    0.0000312298615991952647303817,
    0.00006233885431278719162304786,
    -0.0002599743371222568155687327,
    -0.0005890202246332165367248557,
    0.001266561078925660310465218,
    0.003751434697146086624103267,
    -0.005658283800130883486878552,
    -0.01521172818769721095388814,
    0.02508225333794961153799363,
    0.03933442260558914910228978,
    -0.09622042453595264221988259,
    -0.06662747236681716700434919,
    0.4343860331143565289835351,
    0.7822389344242826059172558,
    0.4153084270006822675824765,
    -0.05607731960356925754451751,
    -0.08126671024919372710026977,
    0.02668230466960483035498974,
    0.01606894713157502874167903,
    -0.007346167936268050736858815,
    -0.001629492425226786037409377,
    0.0008923139025370029715419906,
];

pub(crate) const COIF5: [f64; 30] = [
    -0.00000009604010112767894148615004,
    -0.0000001623799517204833758995188,
    0.000002061220398578878348477003,
    0.000003700727711339479615305611,
    -0.00002127022167251561428650761,
    -0.00004121986192426550099513274,
    0.0001403563281237324314541098,
    0.0003018579416682447844402781,
    -0.0006375589261258811542287805,
    -0.001661627303929878816252108,
    0.002431575442538288622101872,
    0.006761520220620416930790153,
    -0.009159507338676162527257851,
    -0.01975839160096546504030712,
    0.03267479946705735549539185,
    0.0412875304721178337796772,
    -0.1055631513073372329536426,
    -0.06203775157498195996774726,
    0.4379823066591633784483406,
    0.774293622860327435120098,
    0.4215712667307543459749297,
    -0.05204667025355476372983077,
    -0.09192158806008608740167887,
    0.02816974427053235349727167,
    0.02340832211892778305650786,
    -0.01013158484690027637264986,
    -0.004159312627578640175762814,
    0.002178294377845694726469894,
    0.0003585777411617576781836803,
    -0.0002120818620674940000857961,
];

pub(crate) const COIF6: [f64; 36] = [
    -0.00000000530908841719689367284177,
    -0.000000008487143396262436892120216,
    0.0000001350324499356144636509912,
    0.0000002255997852816182017190159,
    -0.00000165961929510242085939332,
    -0.000002924385559757522879808372,
    0.00001313985135402144232847754,
    0.0000247365593287232283842194,
    -0.00007528004306935965391639476,
    -0.0001545771992797995110155429,
    0.0003252223590102408176671922,
    0.0007698547307507266857992678,
    -0.001157435013427334825897308,
    -0.003073939507208559365758482,
    0.003857658270593686700850045,
    0.009591090175904053508060265,
    -0.01265006790873235247019135,
    -0.0229501532798490649744938,
    0.03888132625151075744129869,
    0.04185249067613627110828745,
    -0.1122608079648172441089571,
    -0.05810891797261479724268085,
    0.4404011911268527756924129,
    0.7684032575798924735721585,
    0.425819545012838529540744,
    -0.04876407217567387680778879,
    -0.09967300204601176050189792,
    0.02878611434666556931349923,
    0.02964577289132384191328029,
    -0.01223157779003791398308998,
    -0.007029406391002728654582299,
    0.003539019871540998243841791,
    0.001091624712325903147000505,
    -0.0006246130439256836110878401,
    -0.00008117002626784840778068758,
    0.00005077548783634056549490116,
];

pub(crate) const COIF7: [f64; 42] = [
    -0.0000000002990566231736865978112931,
    -0.0000000004578334067792951000232752,
    0.000000008796593384856986884849998,
    0.00000001393510388521645313589302,
    -0.0000001255091319079457213886593,
    -0.0000002069320524393852584175188,
    0.000001157976906948957318408593,
    0.000002002078049855418317043996,
    -0.000007771243547311862197952623,
    -0.00001423563697845150139234278,
    0.00004043048241714020205484631,
    0.00007971050025993866542262795,
    -0.0001678172121548497414296464,
    -0.0003690668287348953580974398,
    0.0005794994482340953779672676,
    0.001434741856652412429068422,
    -0.001801537283333042764946197,
    -0.004617842130433118773280565,
    0.005431316442880095712864019,
    0.01205233824184162409742793,
    -0.01594684681956794192192461,
    -0.02515425756853902419796221,
    0.04399304616307941895314571,
    0.04170535760257679247509088,
    -0.1172935710431927819330511,
    -0.05475124164815045602061616,
    0.4421374614018425686090552,
    0.7638153654167334494218267,
    0.4288888072494225767172793,
    -0.04603339703846630326378175,
    -0.1055561682215613028557044,
    0.02893704198352314849174149,
    0.03491050510474272283722996,
    -0.01380255423628840016903041,
    -0.009938895269080580407994319,
    0.00482944656070203887782144,
    0.002105772041410547846390644,
    -0.001169314428579763549126413,
    -0.0002872023753570612076245483,
    0.0001751021677848317960931451,
    0.00001871135500141217876813975,
    -0.00001222225062406577242096143,
];

pub(crate) const COIF8: [f64; 48] = [
    -0.00000000001707989594705548626283738,
    -0.0000000000252542349388545720111268,
    0.000000000570481033390973584841089,
    0.0000000008669995082338710542367492,
    -0.000000009271205591546296984775222,
    -0.00000001454000853375352930126998,
    0.00000009772418508367799263056801,
    0.0000001589351722153065127559512,
    -0.0000007515021558886325432480963,
    -0.000001275454299640756528863876,
    0.000004496936443579391970101246,
    0.000008031502995440786685905042,
    -0.00002180200076701035554740601,
    -0.00004147478606916181877260069,
    0.00008754452091843062475767789,
    0.0001816928764843102144486975,
    -0.0002977789321956400233649964,
    -0.0006871716433480045196913188,
    0.0008967760630796797792843589,
    0.002235649422048103206195346,
    -0.002544003710245273594536819,
    -0.006156659548258421391087047,
    0.007065827011035096666402566,
    0.01411747007761878294762603,
    -0.01898524469525486937926395,
    -0.02665671054264860326266096,
    0.04825237108568226213067831,
    0.04118580667625654223584775,
    -0.1212111682314964827833492,
    -0.05186074316118868127167829,
    0.4434425498415260347151445,
    0.7601133020179405841432185,
    0.4312098155550876388275583,
    -0.0437189833659455892589385,
    -0.1101699769834701692072798,
    0.02882862175928800965718501,
    0.03937203787797984716467781,
    -0.01497846208170843483598045,
    -0.01274237063271979608636286,
    0.005994849192155885832244966,
    0.003300825010616110274236368,
    -0.001783260008597197009486135,
    -0.0006235604474579402745765266,
    0.0003712949956074124168749206,
    0.00007547367838165040170115422,
    -0.00004829631521409294566370141,
    -0.000004368264820320075151433795,
    0.000002954336521414886534107891,
];

pub(crate) const COIF9: [f64; 54] = [
    -0.000000000000985843726123707794890411,
    -0.000000000001416273550918584082331709,
    0.00000000003686179736445179000697701,
    0.00000000005417100964283038459552236,
    -0.0000000006723464414885983889729702,
    -0.000000001013627568817046601532257,
    0.000000007974005886846830047448216,
    0.000000012375256619810126031388,
    -0.0000000691654704121803754795952,
    -0.0000001109667018087942446759791,
    0.0000004679584769454298994653793,
    0.0000007802480329370885604766458,
    -0.000002572383574486687400780481,
    -0.00000448811147515276459161928,
    0.00001181440945157869502424395,
    0.00002177639641002902855400868,
    -0.00004613708198462492887865008,
    -0.00009135595508746477226829502,
    0.0001554135212667388636371274,
    0.0003369138692848271088818579,
    -0.0004627290855053043283802439,
    -0.00109574562795260697922739,
    0.001269690925135340047943955,
    0.00311322778838430411565974,
    -0.003357674526586578757358925,
    -0.00761404244825891838438503,
    0.00870275744622918227821895,
    0.01581871581592506070812476,
    -0.02175455351094884512419547,
    -0.02766123949868046216771234,
    0.05184461568624731953036644,
    0.0404737674557289622834233,
    -0.124345589539290632408175,
    -0.04934886629362916776742054,
    0.4444578931764479601262963,
    0.7570455233843789155656623,
    0.4330267511031541949328982,
    -0.04172611020585280383610183,
    -0.1138835081900450851843942,
    0.02857266755694928481168482,
    0.04318172760825045308763492,
    -0.0158602238947929061185782,
    -0.01537664962971876415898098,
    0.00702234046019623806694776,
    0.004597056424920538397760339,
    -0.00242124167365164854465176,
    -0.001075458272741238070768777,
    0.0006264730321397160225926903,
    0.000182284859663422619613718,
    -0.0001144339527859028346956291,
    -0.00001978720443246248002081358,
    0.00001315888564542533064694128,
    0.000001029320066894578583548375,
    -0.0000007164920431247885779918721,
];

pub(crate) const COIF10: [f64; 60] = [
    -0.0000000000000573796126689743540865656,
    -0.00000000000008044508599489870960502322,
    0.000000000002374617931225515828078385,
    0.000000000003393464737916165825082422,
    -0.00000000004804052212478306519152173,
    -0.00000000007012920333305390138880264,
    0.0000000006333121950019276561208165,
    0.0000000009467830636939099544006242,
    -0.00000000611891013254352897159318,
    -0.000000009396332747419240748459105,
    0.00000004620903057304520822291808,
    0.00000007315542758722408915380029,
    -0.0000002840907583862188020913024,
    -0.000000465762440100492326263982,
    0.000001462445031978212248722007,
    0.000002497202791005427423574924,
    -0.000006434329489073880851859703,
    -0.00001153105839215023088934788,
    0.00002454191012102919743878733,
    0.00004672498135481277617723703,
    -0.00008202162255997292683671468,
    -0.000168579834332239716660623,
    0.0002436317307208456066358604,
    0.0005451673708605961864159806,
    -0.0006598662532419505765898804,
    -0.001574858223192361671508022,
    0.001689969792639744571721705,
    0.00402022279070027386410624,
    -0.004218113884810503408373528,
    -0.008953207286543774304221621,
    0.01030537800244985154052291,
    0.01720591249831959074212406,
    -0.02426732868279509250375447,
    -0.02831006394442857690418869,
    0.05490896399592107984810596,
    0.03966834927953806488876154,
    -0.1269091043055490808377783,
    -0.04714526253802028138428781,
    0.4452691977196149841766726,
    0.7544501094947819730407446,
    0.4344881821627113449579838,
    -0.03998711301587223876374821,
    -0.116936070502068986676214,
    0.02823291273879877799624083,
    0.04646274705470044424915343,
    -0.0165215112687055326601282,
    -0.01782044578128554740414913,
    0.007917157067706417916674866,
    0.005937373265895877494369159,
    -0.003053992493811566021760795,
    -0.001620778108853292934915524,
    0.000924939960423731485916754,
    0.0003434550261801568352658387,
    -0.0002117741364942026817928811,
    -0.00005264472185921727741264586,
    0.00003445969323417022607807664,
    0.000005173962608452716055364596,
    -0.000003551205538569571166232974,
    -0.0000002442764864884845616068842,
    0.0000001742367480312722309010849,
];

pub(crate) const COIF11: [f64; 66] = [
    -0.000000000000003362361318093742699096895,
    -0.000000000000004615818040032402155062065,
    0.0000000000001525825549533055108435789,
    0.0000000000002129278459464559375885265,
    -0.000000000003391025392797988127123982,
    -0.000000000004818423114601901237136264,
    0.00000000004919793979271458915748386,
    0.00000000007131883881772345047538425,
    -0.0000000005240838827477835971918484,
    -0.0000000007768177928970199668261295,
    0.000000004371514216501340869199738,
    0.000000006643004284847311015064611,
    -0.00000002973714454312135374399102,
    -0.00000004647551654558209052655335,
    0.000000169665166008493329266726,
    0.0000002737693363700020131070161,
    -0.000000828796735352409776394374,
    -0.00000138737548457968949946399,
    0.000003521145977293115611716752,
    0.000006153164872698854129164786,
    -0.00001316375093079977502024454,
    -0.00002423559202462401379433998,
    0.00004368364304478778250596938,
    0.00008582415436286543652857212,
    -0.0001298668208927485990047956,
    -0.0002754268778467295545990534,
    0.0003512267504200824118874846,
    0.0008017452103384918246642421,
    -0.0008861775180562736975095617,
    -0.002103610076466363738162402,
    0.002149020717634626820302657,
    0.004922673261101512612314401,
    -0.005105112841283235107503469,
    -0.01016088486651201515387211,
    0.01185197442750696335267424,
    0.01832964333662163644578236,
    -0.02654507086217535588579253,
    -0.02870259601972792798396661,
    0.05755024470407019837603357,
    0.03882560372412316440637881,
    -0.1290437322252642182718319,
    -0.04519495629357891952615489,
    0.4459314428205927716142298,
    0.7522175440402374402282248,
    0.4356896083515125472906959,
    -0.03845246068584405596535447,
    -0.1194893962281712435080649,
    0.02784705124131645406770907,
    0.04931253893772498397840565,
    -0.01701592242448056804815515,
    -0.0200732519761641255151563,
    0.008691538302863684173349412,
    0.007283017155944006976175942,
    -0.003663863529158745743069536,
    -0.002236842519594617068739995,
    0.001252073039885081813873957,
    0.0005577204869484764888573625,
    -0.0003381080420145401175049948,
    -0.0001076666813771206827454047,
    0.00006942759574780767801906872,
    0.00001503949885335961941248365,
    -0.00001018591923176713757070912,
    -0.00000134935217918028462234575,
    0.0000009510573210512221640821956,
    0.00000005829773387691353785206266,
    -0.00000004246658850505321514235305,
];

pub(crate) const COIF12: [f64; 72] = [
    -0.0000000000000001981337717041473595860547,
    -0.0000000000000002670361623332565941219957,
    0.000000000000009783102459953236625915649,
    0.00000000000001337454812966310502679377,
    -0.0000000000002369380882301043283783956,
    -0.0000000000003290045600002305731417326,
    0.000000000003752023520312859431106208,
    0.000000000005299712095238988150519368,
    -0.00000000004369389307221472039619394,
    -0.00000000006288984311455846148910651,
    0.0000000003990594029041717083505101,
    0.0000000005864666471845080915161493,
    -0.000000002976907032226953445193427,
    -0.000000004477523498150714429901771,
    0.00000001865413770679035413703914,
    0.00000002879531926985976025528598,
    -0.0000001002258113198792822739818,
    -0.0000001593123053096027832184305,
    0.0000004690273110710610333004534,
    0.0000007708437343672785995138158,
    -0.000001935601054214237032096921,
    -0.000003306239212897176601036603,
    0.000007112977349641406609652514,
    0.00001271854495114456605150445,
    -0.00002344975069700953136317412,
    -0.00004433611442746385270788009,
    0.0000698246553433853943491233,
    0.0001411686033736130909104628,
    -0.0001895789427595722385130189,
    -0.0004119898713595868361241059,
    0.0004769927332886410471790573,
    0.001099444238862773946807661,
    -0.001138485255144293557816315,
    -0.002663098695894828334823634,
    0.002638532076072488876533617,
    0.005797853171804963866298177,
    -0.006002793708808538096499685,
    -0.01123692841483634428934035,
    0.01333075543550515766610953,
    0.01923522882933757435774957,
    -0.02861160212351852860646062,
    -0.02890894744141171701645732,
    0.05984819686064440924511132,
    0.03797767256570917099312013,
    -0.1308480665661586606063338,
    -0.0434549399350366294392245,
    0.4464815228895738785652725,
    0.7502707776506686299100579,
    0.4366951744905069321411872,
    -0.03708505815411895778499485,
    -0.1216566097026891696275541,
    0.02743798196811415152085445,
    0.05180772024804605746517439,
    -0.01738271453899042223723015,
    -0.02214438902479089546493363,
    0.009359630574317224713243313,
    0.008608649814937597774533451,
    -0.004241021014921407192299618,
    -0.002903349624995668447346997,
    0.001595699522267577828357754,
    0.0008204877603314603964554386,
    -0.0004894690765309504939736818,
    -0.0001875905784249983399188111,
    0.0001192552652063474249869227,
    0.00003319558670785468634106818,
    -0.00002219929936143942789464334,
    -0.000004255365106601994153005808,
    0.000002965411949878775988472934,
    0.0000003510411417820053893138106,
    -0.0000002531117984656268013750444,
    -0.00000001397637418143627774689715,
    0.00000001037010009101512947291841,
];

pub(crate) const COIF13: [f64; 78] = [
    -0.00000000000000001173038664030301811596091,
    -0.00000000000000001555427041798629196151141,
    0.0000000000000006260971679551619689832613,
    0.0000000000000008406602973450897893117312,
    -0.00000000000001641324405964773189997881,
    -0.00000000000002233977995235260046570129,
    0.00000000000028171589120208276220501,
    0.0000000000003891579035068562177897588,
    -0.000000000003560826447455428711242369,
    -0.00000000000499908968900025004386156,
    0.0000000000353470005405449587117521,
    0.00000000005051249576886845815287462,
    -0.0000000002869880459508662782283426,
    -0.0000000004182146540712130719396782,
    0.000000001959961326135215983555307,
    0.000000002918639970454812681682746,
    -0.00000001149212756630932465700048,
    -0.00000001753054627301799632758651,
    0.00000005876531952269822451398836,
    0.00000009209610667203678107772639,
    -0.0000002653281517709694121858225,
    -0.0000004287007433456269395149324,
    0.000001068427617719579188744028,
    0.000001787560627809843381789815,
    -0.000003868533337330694805479298,
    -0.000006740799218474298035890576,
    0.00001267653881565346174942113,
    0.00002318774250938065393254708,
    -0.0000377996620999930044767362,
    -0.00007329758910003689935212801,
    0.0001032218910702752308079094,
    0.000213916888995290606790417,
    -0.0002607867431764194859032668,
    -0.0005766881259563564612533049,
    0.0006196153396181822191682298,
    0.001430105186856121379096463,
    -0.001413526536895260256668228,
    -0.003237559413824624837685562,
    0.003150877638188897406079647,
    0.006631574528454966740986798,
    -0.006899115322911729408783543,
    -0.01218803467102721332926407,
    0.01473631763163898121538065,
    0.01996119614595352059760458,
    -0.03049009579423408652920635,
    -0.02897913316298714875296483,
    0.06186422181011112797488494,
    0.03714297920870841818175023,
    -0.1323926837286288626938102,
    -0.04189131400119778386725855,
    0.4469451189120828837886279,
    0.748553832458193846299821,
    0.4375495433141353696093745,
    -0.0358565472708610305518917,
    -0.1235191563398333192136391,
    0.0270198670594543714773561,
    0.05400870551305576861000901,
    -0.01765094147449073821998233,
    -0.02404734005036483421302584,
    0.009935243248428364537527813,
    0.009898330681843989578561072,
    -0.00478067594933421612796165,
    -0.003603311278768315823600732,
    0.001946295412387387272282191,
    0.001125533913083124910176069,
    -0.0006612380867179060497940135,
    -0.0002933810693989282293928089,
    0.0001839906820465216693433197,
    0.00006181045384455712953658546,
    -0.00004083713796575876053048665,
    -0.00001008560197073056061871973,
    0.00000695230175126379953368539,
    0.000001193888078440708775743704,
    -0.0000008524405890651040585120207,
    -0.00000009111838156033148659306698,
    0.00000006701078769903017751673505,
    0.000000003363298512034630150667372,
    -0.00000000253646046215710105490727,
];

pub(crate) const COIF14: [f64; 84] = [
    -0.0000000000000000006972752077994577278038033,
    -0.0000000000000000009112090547755773601299864,
    0.00000000000000004000437986126701086010314,
    0.0000000000000000528627451746563215012208,
    -0.00000000000000112860673171168460070645,
    -0.000000000000001509368053411073274080213,
    0.00000000000002087175435684503915743901,
    0.00000000000002827804378477003915077575,
    -0.0000000000002845914016875713881425511,
    -0.0000000000003910486063605146296733657,
    0.00000000000305123521286077302179569,
    0.000000000004257417896733187341612296,
    -0.00000000002678982110415133401206594,
    -0.00000000003801184928644451090511209,
    0.0000000001980912034671011250000133,
    0.0000000002862848247030911244537138,
    -0.000000001259075210002466365376864,
    -0.000000001856868475293970631536451,
    0.000000006987387541011993856932906,
    0.00000001053864045189426475184505,
    -0.00000003427757286145719060139599,
    -0.00000005300650696936341829205568,
    0.0000001501341371314425266648041,
    0.0000002387649405196465356156319,
    -0.0000005919974641332917708093104,
    -0.0000009718423533464629035424345,
    0.000002116075762495585754779546,
    0.000003602893601306652003330843,
    -0.000006895709397840080495287966,
    -0.00001225451572546570667727062,
    0.00002058327893657675719345755,
    0.00003849201590195014318360536,
    -0.00005654418404120940247394728,
    -0.0001122196194380877415927925,
    0.0001439041358804260344571302,
    0.0003043599006063342775514624,
    -0.0003429728615062403512467326,
    -0.0007668251488526075989454744,
    0.0007777201566101955973117632,
    0.001785618198903610263222896,
    -0.001708053866107036525973095,
    -0.003814524076580171150357979,
    0.003679323501977375433791284,
    0.007415778230765500064758378,
    -0.007785202417072225461458501,
    -0.01302408800538946281877273,
    0.01606728392606530594899361,
    0.02053949987453051323482711,
    -0.03220185256406461749012493,
    -0.02894925613194683847173572,
    0.06364620314135399636867874,
    0.03633187623818003031406221,
    -0.1337294283432153840784906,
    -0.04047709315229174736883166,
    0.4473406567537405176260279,
    0.7470249379615077067740003,
    0.4382847599501610291738984,
    -0.03474484970544800682690223,
    -0.1251371360088546214051064,
    0.02660154627198806076560089,
    0.05596345341137635986950016,
    -0.0178423541524386393419821,
    -0.02579684377082798116265216,
    0.01043094917064513876825416,
    0.0111425521095146907307738,
    -0.005281202836308561063272116,
    -0.004323062280774556294382638,
    0.002296710726458408603767314,
    0.001466121456990641643350348,
    -0.0008488083847885695464377531,
    -0.0004246373286971684489314594,
    0.0002628623520649985109871871,
    0.000102483332195685985870591,
    -0.00006692604993754284591761516,
    -0.00001999557639740937638878071,
    0.00001364035767552805365570006,
    0.000003024780818684495702498415,
    -0.000002139463925057922566734438,
    -0.0000003324658385771606818642385,
    0.0000002424279845810464172998773,
    0.00000002360235756379167086797627,
    -0.00000001766249514873849441996161,
    -0.0000000008118993462836169477568389,
    0.0000000006212814528402405378526778,
];

pub(crate) const COIF15: [f64; 90] = [
    -0.00000000000000000004159057393063562309238365,
    -0.00000000000000000005364244753127261021258771,
    0.000000000000000002552475920584872182689905,
    0.000000000000000003325022722474857384690919,
    -0.00000000000000007710937330347504579034793,
    -0.0000000000000001015262275777643144283675,
    0.000000000000001528582254287465005708584,
    0.000000000000002035879447713056304417803,
    -0.00000000000002236551020293379026698367,
    -0.0000000000000301598298513759675448251,
    0.0000000000002575890601011180927781074,
    0.0000000000003520513878910659849374412,
    -0.000000000002432134740307776505497821,
    -0.000000000003372807196757149927685391,
    0.00000000001936074181554064928214996,
    0.0000000000272779912229135125066498,
    -0.0000000001326229523978624504177335,
    -0.0000000001901224988904381830097171,
    0.0000000007940677605424420691250184,
    0.000000001160183521485022655208885,
    -0.000000004207104779368382123663125,
    -0.000000006276946965454188274680612,
    0.00000001992151339689276059871278,
    0.00000003042030690552266538394612,
    -0.00000008500698229913930941135561,
    -0.0000001332072673921234195908213,
    0.0000003291526254111233217785964,
    0.0000005309958252905002983721328,
    -0.000001163368531408228626525367,
    -0.000001939800386832084896638869,
    0.000003772091064754691154423333,
    0.000006534415586793016027646139,
    -0.00001126710177400907168094018,
    -0.00002041399071873256588962459,
    0.00003112248367221642520461314,
    0.00005943677222391489765743536,
    -0.00007986582333506880523356364,
    -0.0001618053295543676547724871,
    0.0001917522105586304845097068,
    0.000412068681388309951060811,
    -0.000435542943792670397742256,
    -0.0009790730546106287453950179,
    0.0009498999754877983196788005,
    0.002158498466530980527955386,
    -0.002018929796799420750552656,
    -0.004384524134541960792288418,
    0.004218089500963982489689652,
    0.008146642682593414896974338,
    -0.008654690594816528970145697,
    -0.01375609348896699758724171,
    0.01732475364848345966706233,
    0.02099633854679525471476076,
    -0.03376590813619630843112063,
    -0.02884567344425101667604316,
    0.06523194483316829828112304,
    0.03554988160862525975458581,
    -0.1348972365781996030076328,
    -0.03919056961249978848771391,
    0.4476816987616904497393477,
    0.7456522133710781208293383,
    0.4389244085313621646093907,
    -0.03373249605098049830331775,
    -0.1265558489286437438003929,
    0.02618853484172406140273459,
    0.05771035117514861090270983,
    -0.01797342382925516679481603,
    -0.02740743945377812143537888,
    0.01085781218464285623193089,
    0.01233614757165424867524361,
    -0.005742902847255387625835521,
    -0.005051893642506076129161663,
    0.00264175381472381764699775,
    0.001835660446690030259825344,
    -0.001047938916841322691889116,
    -0.0005800110441534674088348567,
    0.0003545813856134761806772338,
    0.0001562176440038481591097291,
    -0.000100881562891500390689338,
    -0.00003505374322008592978712482,
    0.0000236732157311141234816692,
    0.000006363684015137760469722414,
    -0.000004460423183361215108575989,
    -0.0000008968212011102488243760524,
    0.0000006485869388545793454069698,
    0.0000000919725671253952373169639,
    -0.00000006831331679744407086349555,
    -0.00000000610221474728920384319609,
    0.00000000463776346861160739822432,
    0.0000000001965173624853245198828949,
    -0.0000000001523657153849017708831494,
];

pub(crate) const COIF16: [f64; 96] = [
    -0.000000000000000000002488234874087105313950467,
    -0.000000000000000000003171243373967864887567011,
    0.0000000000000000001626584021224701021384243,
    0.0000000000000000002091731192186315836212099,
    -0.000000000000000005238852980994671141731299,
    -0.000000000000000006801835449347436073920034,
    0.0000000000000001108243033413450500099284,
    0.0000000000000001453726079805952714309242,
    -0.000000000000001732015321824564221179606,
    -0.000000000000002297130946940807016397219,
    0.00000000000002132762085663950449480366,
    0.00000000000002862384604227304018097593,
    -0.0000000000002155086699964126717798802,
    -0.0000000000002929603467665680964417163,
    0.000000000001837741692652943807528889,
    0.000000000002533043295168226971042745,
    -0.00000000001349867029282178323748512,
    -0.00000000001888754243442615070623351,
    0.00000000008674866101263906795172502,
    0.0000000001233822423910207930101371,
    -0.0000000004937872384599663200219146,
    -0.0000000007149797543708523100369144,
    0.000000002514431389815212566009869,
    0.000000003712889030843456226322082,
    -0.00000001154860009891163508370258,
    -0.00000001742573716313695302819436,
    0.00000004817367733205771863727211,
    0.00000007445242757454341198497229,
    -0.0000001835890843628985912103918,
    -0.0000002914269718183251811451161,
    0.0000006424757126690243969001338,
    0.000001051045524180126579705838,
    -0.000002073723145043526207287332,
    -0.00000351116293951585859895218,
    0.000006196734772234442448506,
    0.00001091902605100446781811671,
    -0.00001720027603845479061421726,
    -0.00003175372313273221446276381,
    0.00004450165161739413677071883,
    0.00008666386407002670433808583,
    -0.0001078330571203061071525534,
    -0.0002223765664752645233870343,
    0.0002465548333905215891773133,
    0.0005360682879309423311264826,
    -0.0005378608496461215020267854,
    -0.001209845339766497463243611,
    0.001134738599370214637285237,
    0.002542163016104133713146673,
    -0.002343200188184489402704047,
    -0.004940628195250105873792545,
    0.004762320192500803066326664,
    0.008823187183975601810548284,
    -0.009503158857743535317674777,
    -0.01439504906308473192177999,
    0.01851129491005009189419361,
    0.02135308989070689583700258,
    -0.03519902731386549687986331,
    -0.02868782834982490717590231,
    0.06665164158948773398538634,
    0.03479958514971713545715915,
    -0.1359259149891234308427101,
    -0.03801409965109622812740042,
    0.4479784476532807646620427,
    0.744410851077594415414751,
    0.4394862290626149192718231,
    -0.0328054638335869425125324,
    -0.1278100770656404316927279,
    0.0257842299074464501029702,
    0.05928039565969397267641838,
    -0.0180567607738233992797916,
    -0.0288927799397611408116493,
    0.01122539739108762042729683,
    0.01347684513904908940040706,
    -0.006167204740229640519411092,
    -0.005781576422578688263798075,
    0.002977777483156302321121167,
    0.002228062752711592545834529,
    -0.001254910401428914554916583,
    -0.0007575611156619532337436196,
    0.0004575809541850859446521227,
    0.0002234748735119220647282745,
    -0.0001427652095205392301143638,
    -0.00005616532904749551083616738,
    0.00003756395791987937707616038,
    0.00001176562457990958629244684,
    -0.000008174656304120635013331364,
    -0.000001996008603624959972211135,
    0.000001432079204719059365452801,
    0.0000002632053386772810482183301,
    -0.0000001940866364398909300020932,
    -0.00000002529381289790086338903046,
    0.00000001909693969280091925739586,
    0.00000000157498524056752804897748,
    -0.000000001213763349944682076423497,
    -0.00000000004767601284823407375652124,
    0.00000000003740776214156404917498545,
];

pub(crate) const COIF17: [f64; 102] = [
    -0.0000000000000000000001492573176705147371752181,
    -0.0000000000000000000001881677148105947101852361,
    0.00000000000000000001035410490873247272182577,
    0.00000000000000000001315979592288046363028663,
    -0.0000000000000000003541741324829285961903123,
    -0.0000000000000000004540571956247477649219586,
    0.000000000000000007963782939035077192149294,
    0.00000000000000001030439481739055470552471,
    -0.0000000000000001324052488356665062543368,
    -0.0000000000000001730194696072985785706639,
    0.000000000000001735944443740551764479555,
    0.000000000000002292546657107990915276635,
    -0.00000000000001869277810146247746941668,
    -0.00000000000002496820150249267606912899,
    0.0000000000001700156764661081593895692,
    0.0000000000002298842703415545849672147,
    -0.00000000000133313240698300578774499,
    -0.000000000001826498790845330896487501,
    0.000000000009153903474792874447098775,
    0.00000000001272176115369507836458103,
    -0.0000000000557220436999876533203855,
    -0.00000000007864847350619418248770756,
    0.0000000003037030461263031990911914,
    0.0000000004359447175469891015178799,
    -0.000000001494280879087876132544572,
    -0.000000002184804774551490280085833,
    0.000000006682924028386818595863355,
    0.000000009970659851204181754991842,
    -0.00000002732772421056791030605052,
    -0.00000004169073699211023693890274,
    0.0000001026952662704410296377067,
    0.0000001605915327087736743807658,
    -0.0000003562354702980366927622473,
    -0.0000005726779955346246933222017,
    0.000001145130377692255492334751,
    0.000001899280681977994490909688,
    -0.000003422757310554497851281608,
    -0.000005883630730192030169575009,
    0.000009540946084267749955558184,
    0.00001709458330770557282773936,
    -0.00002487360746159996362680995,
    -0.00004674968583543715730434925,
    0.00006085540589948546977934127,
    0.000120635443369131718327307,
    -0.0001404313649191618888940891,
    -0.0002939173729781547478312476,
    0.0003080445755741306138736357,
    0.0006750053722876708578101712,
    -0.0006492674740108699731402919,
    -0.001455559805082794633951382,
    0.001330834181963004916871007,
    0.002931018454369936285242026,
    -0.002678142335294391752908982,
    -0.005477959124841987569032309,
    0.005308007234603321147781152,
    0.009446275522838597574204478,
    -0.01032766598728408063978534,
    -0.01495136425606129713938852,
    0.0196302939584118429916515,
    0.02162718108412339801382984,
    -0.03651586618684619922614587,
    -0.02849019813685731150609826,
    0.06792967266468390163947078,
    0.03408179745379695535500986,
    -0.1368386658296636693155079,
    -0.03693320069683255629788832,
    0.4482387248514952404754297,
    0.743281221441138950645211,
    0.4399838206520420014200567,
    -0.03195235252061503355980321,
    -0.1289269634440451117729509,
    0.02539065863932941577441049,
    0.06069883609932373580431175,
    -0.01810211838527856637037772,
    -0.0302653504625716267273372,
    0.01154189870877448537145327,
    0.01456427664808090764736459,
    -0.006556154798272959688398842,
    -0.006505894912824299568254727,
    0.003302319453433164454098092,
    0.002637902009529555658745581,
    -0.001466566388660569533394784,
    -0.0009550264124726986700308906,
    0.0005701892687802022222434695,
    0.0003042648910918758511055804,
    -0.0001923595852477447088954565,
    -0.00008403499221716050017385452,
    0.00005567734714465559378929194,
    0.00001977791990756864147493754,
    -0.00001362511749077209501253283,
    -0.000003882741927783709029486144,
    0.000002764328498891352022741145,
    0.0000006179728213804947537513544,
    -0.0000004524984010195444169147099,
    -0.00000007654855556872684548549919,
    0.00000005742465077331123018012849,
    0.000000006919675145357251052452073,
    -0.000000005301395728318189322014095,
    -0.0000000004058719040596706674947608,
    0.0000000003167429925399279841182874,
    0.00000000001158961100395001734467596,
    -0.000000000009193044901647832006835793,
];

pub(crate) const BIOR1_3_DEC_LO: [f64; 6] = [
    -0.08838834764831844659216387,
    0.08838834764831844659216387,
    0.7071067811865475727373109,
    0.7071067811865475727373109,
    0.08838834764831844659216387,
    -0.08838834764831844659216387,
];

pub(crate) const BIOR1_3_REC_LO: [f64; 6] = [
    0.0,
    0.0,
    0.7071067811865475727373109,
    0.7071067811865475727373109,
    0.0,
    0.0,
];

pub(crate) const BIOR2_2_DEC_LO: [f64; 6] = [
    0.0,
    -0.1767766952966368931843277,
    0.3535533905932737863686555,
    1.060660171779821192572513,
    0.3535533905932737863686555,
    -0.1767766952966368931843277,
];

pub(crate) const BIOR2_2_REC_LO: [f64; 6] = [
    0.0,
    0.3535533905932737863686555,
    0.7071067811865475727373109,
    0.3535533905932737863686555,
    0.0,
    0.0,
];

pub(crate) const BIOR2_4_DEC_LO: [f64; 10] = [
    0.0,
    0.03314563036811941226789102,
    -0.06629126073623882453578204,
    -0.1767766952966368931843277,
    0.4198446513295125970266497,
    0.9943689110435824929368209,
    0.4198446513295125970266497,
    -0.1767766952966368931843277,
    -0.06629126073623882453578204,
    0.03314563036811941226789102,
];

pub(crate) const BIOR2_4_REC_LO: [f64; 10] = [
    0.0,
    0.0,
    0.0,
    0.3535533905932737863686555,
    0.7071067811865475727373109,
    0.3535533905932737863686555,
    0.0,
    0.0,
    0.0,
    0.0,
];

pub(crate) const BIOR3_1_DEC_LO: [f64; 4] = [
    -0.3535533905932737863686555,
    1.060660171779821192572513,
    1.060660171779821192572513,
    -0.3535533905932737863686555,
];

pub(crate) const BIOR3_1_REC_LO: [f64; 4] = [
    0.1767766952966368931843277,
    0.5303300858899105962862564,
    0.5303300858899105962862564,
    0.1767766952966368931843277,
];

pub(crate) const BIOR3_3_DEC_LO: [f64; 8] = [
    0.06629126073623882453578204,
    -0.1988737822087164874851339,
    -0.1546796083845572711279459,
    0.9943689110435824929368209,
    0.9943689110435824929368209,
    -0.1546796083845572711279459,
    -0.1988737822087164874851339,
    0.06629126073623882453578204,
];

pub(crate) const BIOR3_3_REC_LO: [f64; 8] = [
    0.0,
    0.0,
    0.1767766952966368931843277,
    0.5303300858899105962862564,
    0.5303300858899105962862564,
    0.1767766952966368931843277,
    0.0,
    0.0,
];

pub(crate) const BIOR4_4_DEC_LO: [f64; 10] = [
    0.0,
    0.03782845550699546139308005,
    -0.02384946501938000191317159,
    -0.1106244044184234088485578,
    0.3774028556126537641135938,
    0.8526986790094034193117999,
    0.3774028556126537641135938,
    -0.1106244044184234088485578,
    -0.02384946501938000191317159,
    0.03782845550699546139308005,
];

pub(crate) const BIOR4_4_REC_LO: [f64; 10] = [
    0.0,
    -0.06453888262893843863693395,
    -0.04068941760955843672376236,
    0.4180922732222122008373561,
    0.7884856164056643978483691,
    0.4180922732222122008373561,
    -0.04068941760955843672376236,
    -0.06453888262893843863693395,
    0.0,
    0.0,
];

pub(crate) const BIOR5_5_DEC_LO: [f64; 12] = [
    0.0,
    0.0,
    0.03968708834786253126777052,
    0.007948108637387724547939702,
    -0.05446378846835623542509712,
    0.3456052819558860376524825,
    0.7366601814275349327154976,
    0.3456052819558860376524825,
    -0.05446378846835623542509712,
    0.007948108637387724547939702,
    0.03968708834786253126777052,
    0.0,
];

pub(crate) const BIOR5_5_REC_LO: [f64; 12] = [
    0.01345670945941952165680116,
    -0.002694966880607400495290593,
    -0.1367065846639647300684487,
    -0.09350469740066428766482258,
    0.4768032657978189706120697,
    0.8995061097490909007210707,
    0.4768032657978189706120697,
    -0.09350469740066428766482258,
    -0.1367065846639647300684487,
    -0.002694966880607400495290593,
    0.01345670945941952165680116,
    0.0,
];

pub(crate) const BIOR6_8_DEC_LO: [f64; 18] = [
    0.0,
    0.001908831736485026152426236,
    -0.001914286129080886343545074,
    -0.01699063986760709939429393,
    0.01193456527972673136808761,
    0.04973290349093765355849627,
    -0.07726317316721134214333429,
    -0.09405920349576162977473776,
    0.4207962846098392593192139,
    0.8259229974584396233170627,
    0.4207962846098392593192139,
    -0.09405920349576162977473776,
    -0.07726317316721134214333429,
    0.04973290349093765355849627,
    0.01193456527972673136808761,
    -0.01699063986760709939429393,
    -0.001914286129080886343545074,
    0.001908831736485026152426236,
];

pub(crate) const BIOR6_8_REC_LO: [f64; 18] = [
    0.0,
    0.0,
    0.0,
    0.01442628250562224749834321,
    0.01446750489677409884986392,
    -0.07872200106266871694479327,
    -0.0403679790303819037488774,
    0.4178491091503202316468722,
    0.7589077294537631341988713,
    0.4178491091503202316468722,
    -0.0403679790303819037488774,
    -0.07872200106266871694479327,
    0.01446750489677409884986392,
    0.01442628250562224749834321,
    0.0,
    0.0,
    0.0,
    0.0,
];

