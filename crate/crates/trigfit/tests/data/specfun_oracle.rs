// Generated oracle table: (u, ln_gamma(u), digamma(u)).
// Reference values computed with 50-digit arithmetic at the exact
// f64 abscissae and rounded to nearest f64.
pub const SPECFUN_ORACLE: &[(f64, f64, f64)] = &[
    (0.001_f64, 6.907178885383853_f64, -1000.5755719318103_f64),
    (0.0010718913192051276_f64, 6.837712834832158_f64, -933.5058564825961_f64),
    (0.0011489510001873086_f64, 6.7682438192472105_f64, -870.9344634499583_f64),
    (0.0012315506032928262_f64, 6.698771626871588_f64, -812.5596909849207_f64),
    (0.001320088400831418_f64, 6.6292960309330065_f64, -758.1000721759689_f64),
    (0.0014149912974345759_f64, 6.559816788595888_f64, -707.2930178939579_f64),
    (0.0015167168884709225_f64, 6.490333639842176_f64, -659.8935506604538_f64),
    (0.0016257556664437934_f64, 6.42084630627697_f64, -615.6731234345627_f64),
    (0.0017426333860096508_f64, 6.351354489854359_f64, -574.4185176227717_f64),
    (0.0018679135990207828_f64, 6.281857871518636_f64, -535.9308149983179_f64),
    (0.0020022003718155844_f64, 6.21235610975582_f64, -500.02443857295805_f64),
    (0.0021461411978584036_f64, 6.142848839050228_f64, -466.52625779650475_f64),
    (0.002300430119772917_f64, 6.0733356682406345_f64, -435.2747537696443_f64),
    (0.002465811075822604_f64, 6.003816178770355_f64, -406.11924044493014_f64),
    (0.0026430814869741054_f64, 5.934289922825408_f64, -378.91913806080623_f64),
    (0.002833096101839324_f64, 5.8647564213547705_f64, -353.54329530535875_f64),
    (0.0030367711180354575_f64, 5.795215161966597_f64, -329.8693569414721_f64),
    (0.0032550885998350564_f64, 5.725665596694179_f64, -307.78317384425236_f64),
    (0.0034891012134067737_f64, 5.656107139625377_f64, -287.17825260609175_f64),
    (0.0037399373024787977_f64, 5.58653916438926_f64, -267.9552420555316_f64),
    (0.004008806328898464_f64, 5.516961001493727_f64, -250.0214542140643_f64),
    (0.00429700470432084_f64, 5.447371935508091_f64, -233.2904173810769_f64),
    (0.004605922041145103_f64, 5.377771202084777_f64, -217.68145919204315_f64),
    (0.004937047852839003_f64, 5.308157984814712_f64, -203.11931763959976_f64),
    (0.005291978735958442_f64, 5.238531411911436_f64, -189.53377818197558_f64),
    (0.005672426068491977_f64, 5.168890552719634_f64, -176.85933518902314_f64),
    (0.006080224261649421_f64, 5.099234414044669_f64, -165.03487609346382_f64),
    (0.00651733960488242_f64, 5.029561936300723_f64, -154.00338672442948_f64),
    (0.006985879746785249_f64, 4.959871989476557_f64, -143.71167640252605_f64),
    (0.007488103857590023_f64, 4.89016336891951_f64, -134.11012147093382_f64),
    (0.008026433522257174_f64, 4.8204347909404_f64, -125.1524260259509_f64),
    (0.008603464416684501_f64, 4.75068488824444_f64, -116.7953986933292_f64),
    (0.009221978823334321_f64, 4.680912205196194_f64, -108.99874437411921_f64),
    (0.009884959046625586_f64, 4.611115192930113_f64, -101.7248699559278_f64),
    (0.010595601792776159_f64, 4.541292204322351_f64, -94.93870305283681_f64),
    (0.01135733358343105_f64, 4.471441488844461_f64, -88.60752290005541_f64),
    (0.012173827277396614_f64, 4.40156118732538_f64, -82.70080258799857_f64),
    (0.013049019780144023_f64, 4.331649326654889_f64, -77.1900618751648_f64),
    (0.01398713102647238_f64, 4.261703814469665_f64, -72.04872987020642_f64),
    (0.014992684327860455_f64, 4.191722433872308_f64, -67.25201692118411_f64),
    (0.016070528182616384_f64, 4.121702838244502_f64, -62.776795094404335_f64),
    (0.017225859653987867_f64, 4.051642546227867_f64, -58.601486666669224_f64),
    (0.018464249428955436_f64, 3.981538936960592_f64, -54.705960093424565_f64),
    (0.019791668678535563_f64, 3.91138924567447_f64, -51.07143295135453_f64),
    (0.021214517849106298_f64, 3.8411905597761935_f64, -47.68038138762267_f64),
    (0.022739657523579274_f64, 3.770939815558719_f64, -44.51645563935291_f64),
    (0.024374441501222206_f64, 3.7006337957137463_f64, -41.56440121623851_f64),
    (0.026126752255633278_f64, 3.6302691278452013_f64, -38.80998536650029_f64),
    (0.02800503894183631_f64, 3.5598422842165_f64, -36.23992847191946_f64),
    (0.03001835813575589_f64, 3.4893495830018875_f64, -33.84184004147015_f64),
    (0.032176417502507354_f64, 3.4187871913547148_f64, -31.60415899528428_f64),
    (0.03448962260405758_f64, 3.3481511306538394_f64, -29.516097951407225_f64),
    (0.03696912707195026_f64, 3.277437284344007_f64, -27.567591247143135_f64),
    (0.03962688638701478_f64, 3.2066414088477644_f64, -25.749246444839624_f64),
    (0.04247571552536898_f64, 3.1357591480960214_f64, -24.0522990888091_f64),
    (0.04552935074866948_f64, 3.0647860523024786_f64, -22.468570495807374_f64),
    (0.04880251583654431_f64, 2.9937176016947724_f64, -20.990428376167966_f64),
    (0.052310993080562605_f64, 2.922549236013153_f64, -19.61075009638971_f64),
    (0.05607169938205458_f64, 2.851276390696776_f64, -18.3228884067629_f64),
    (0.06010276782070382_f64, 2.7798945407992925_f64, -17.120639469555996_f64),
    (0.0644236350872137_f64, 2.7083992538102186_f64, -15.998213034425369_f64),
    (0.06905513520162328_f64, 2.6367862527077746_f64, -14.95020461810919_f64),
    (0.07401959996915641_f64, 2.565051490733297_f64, -13.971569555169516_f64),
    (0.07934096665797492_f64, 2.4931912395581124_f64, -13.057598795599413_f64),
    (0.08504489341802678_f64, 2.4212021927118026_f64, -12.203896333555765_f64),
    (0.09115888299750818_f64, 2.3490815863569705_f64, -11.406358159349798_f64),
    (0.09771241535346496_f64, 2.27682733973084_f64, -10.661152634162395_f64),
    (0.10473708979594497_f64, 2.2044382178289386_f64, -9.964702193780193_f64),
    (0.11226677735108136_f64, 2.13191401918138_f64, -9.313666294001198_f64),
    (0.12033778407775893_f64, 2.05925579186835_f64, -8.704925516261088_f64),
    (0.1289890261253308_f64, 1.9864660812386412_f64, -8.13556675750801_f64),
    (0.1382622173764655_f64, 1.9135492131336345_f64, -7.602869433426519_f64),
    (0.14820207057988585_f64, 1.8405116167790285_f64, -7.1042926288012165_f64),
    (0.15885651294280528_f64, 1.7673621918878268_f64, -6.637463133137018_f64),
    (0.17027691722258995_f64, 1.6941127249202887_f64, -6.200164303633845_f64),
    (0.18251834943190423_f64, 1.620778359869669_f64, -5.790325701267917_f64),
    (0.1956398343517063_f64, 1.5473781293862532_f64, -5.406013449076681_f64),
    (0.2097046401323233_f64, 1.4739355525164912_f64, -5.04542126479933_f64),
    (0.22478058335487253_f64, 1.400479305819094_f64, -4.706862122808907_f64),
    (0.24094035602395245_f64, 1.3270439751263783_f64, -4.388760502806249_f64),
    (0.25826187606826745_f64, 1.2536708957481821_f64, -4.0896451850534605_f64),
    (0.2768286630392064_f64, 1.1804090894691772_f64, -3.8081425540294838_f64),
    (0.29673024081888694_f64, 1.107316307271402_f64, -3.5429703743199537_f64),
    (0.3180625692794119_f64, 1.0344601873263688_f64, -3.2929320043363317_f64),
    (0.3409285069746811_f64, 0.9619195384505742_f64, -3.0569110151256655_f64),
    (0.36543830709572545_f64, 0.889785759911687_f64, -2.833866183113857_f64),
    (0.39171014908092566_f64, 0.8181644092185347_f64, -2.62282682715311_f64),
    (0.419870708444391_f64, 0.7471769303366069_f64, -2.422888461749171_f64),
    (0.4500557675700497_f64, 0.6769625556539606_f64, -2.2332087398540437_f64),
    (0.48241087041653685_f64, 0.6076803959935876_f64, -2.053003660149426_f64),
    (0.5170920242896755_f64, 0.5395117340424037_f64, -1.8815440153346294_f64),
    (0.5542664520663101_f64, 0.4726625377598579_f64, -1.7181520595822823_f64),
    (0.5941133984965034_f64, 0.4073662116576223_f64, -1.5621983750409014_f64),
    (0.6368249944718586_f64, 0.3438866053229865_f64, -1.4130989190413854_f64),
    (0.6826071834272386_f64, 0.28252130020962274_f64, -1.2703122354922403_f64),
    (0.7316807143427192_f64, 0.22360519755721664_f64, -1.133336815805171_f64),
    (0.7842822061337682_f64, 0.16751443234205066_f64, -1.001708596550141_f64),
    (0.8406652885618325_f64, 0.11467064041933737_f64, -0.8749985828636409_f64),
    (0.9011018251665018_f64, 0.06554560850894045_f64, -0.7528105883881847_f64),
    (0.9658832241158698_f64, 0.020666339412359798_f64, -0.6347790841672469_f64),
    (1.0353218432956615_f64, -0.019379432157316027_f64, -0.520567150421498_f64),
    (1.1097524964120722_f64, -0.05393723448739985_f64, -0.40986452645814025_f64),
    (1.1895340673703196_f64, -0.08227932232969243_f64, -0.3023857550906931_f64),
    (1.2750512407130128_f64, -0.10359756288818604_f64, -0.19786841885605297_f64),
    (1.366716356462006_f64, -0.11699569415556242_f64, -0.09607146600336543_f64),
    (1.4649713983072847_f64, -0.12148090095392279_f64, 0.0032263753007340254_f64),
    (1.5702901247293775_f64, -0.11595464922358709_f64, 0.10022809583954609_f64),
    (1.6831803533309566_f64, -0.0992027139287732_f64, 0.19511981849061014_f64),
    (1.8041864093920719_f64, -0.06988433038517895_f64, 0.2880721269193755_f64),
    (1.93389175045523_f64, -0.026520392832556174_f64, 0.3792413112833219_f64),
    (2.0729217795953696_f64, 0.032519382358436_f64, 0.4687705326823359_f64),
    (2.2219468609395236_f64, 0.10903041837964125_f64, 0.556790908417926_f64),
    (2.381685551976158_f64, 0.20498846157015496_f64, 0.643422520471478_f64),
    (2.5529080682395167_f64, 0.3225660919199213_f64, 0.7287753499528895_f64),
    (2.7364399970746693_f64, 0.46415067418754796_f64, 0.8129501405833023_f64),
    (2.9331662783900425_f64, 0.6323638726831841_f64, 0.896039194542836_f64),
    (3.1440354715915_f64, 0.8300828628707424_f64, 0.9781271042250776_f64),
    (3.370064329271928_f64, 1.0604633838601947_f64, 1.0592914235889366_f64),
    (3.6123426997094303_f64, 1.326964787659852_f64, 1.1396032828841458_f64),
    (3.8720387818125532_f64, 1.6333772538147457_f64, 1.2191279505515515_f64),
    (4.150404757850472_f64, 1.983851351850574_f64, 1.297925346068794_f64),
    (4.448782831127585_f64, 2.3829301488581605_f64, 1.3760505074329565_f64),
    (4.768611697714469_f64, 2.8355840756826187_f64, 1.453554016852427_f64),
    (5.111433483440165_f64, 3.3472487826226534_f64, 1.5304823880690248_f64),
    (5.478901179593939_f64, 3.923866234403466_f64, 1.6068784185564562_f64),
    (5.872786613189477_f64, 4.5719293145756135_f64, 1.682781509650146_f64),
    (6.294988990221888_f64, 5.29853023153304_f64, 1.7582279574630102_f64),
    (6.747544053110693_f64, 6.111413042167958_f64, 1.833251217237608_f64),
    (7.2326338964835335_f64, 7.0190306349300835_f64, 1.9078821435820463_f64),
    (7.752597488629457_f64, 8.030606541884577_f64, 1.9821492088386354_f64),
    (8.309941949353387_f64, 9.156201979432641_f64, 2.0560787016435524_f64),
    (8.907354638610439_f64, 10.406788549847665_f64, 2.1296949075545006_f64),
    (9.547716114208056_f64, 11.794327070879795_f64, 2.203020273452971_f64),
    (10.234114021054527_f64, 13.33185303860016_f64, 2.276075557268945_f64),
    (10.96985797892384_f64, 15.033569269614151_f64, 2.348879964428955_f64),
    (11.758495540521558_f64, 16.914946313013434_f64, 2.4214512722933885_f64),
    (12.603829296797274_f64, 18.992831270217547_f64, 2.493805943725427_f64),
    (13.50993521198025_f64, 21.285565712455757_f64, 2.565959230821477_f64),
    (14.48118227674533_f64, 23.813113441366596_f64, 2.6379252697310007_f64),
    (15.52225357427048_f64, 26.59719889836154_f64, 2.7097171674012417_f64),
    (16.638168860761272_f64, 29.661457093374636_f64, 2.7813470809991476_f64),
    (17.834308769319094_f64, 33.03159599376856_f64, 2.852826290687744_f64),
    (19.116440753857_f64, 36.73557238990445_f64, 2.9241652663667566_f64),
    (20.49074689815846_f64, 40.803782335651746_f64, 2.9953737289268205_f64),
    (21.96385372416547_f64, 45.269267350377234_f64, 3.0664607065121614_f64),
    (23.542864143224154_f64, 50.167937664240625_f64, 3.1374345862380437_f64),
    (25.23539170434766_f64, 55.53881389147211_f64, 3.2083031617655595_f64),
    (27.049597304631316_f64, 61.42428862731933_f64, 3.279073677097199_f64),
    (28.99422853882875_f64, 67.87040958417603_f64, 3.3497528669216714_f64),
    (31.07866187782014_f64, 74.92718601171202_f64, 3.4203469938049005_f64),
    (33.3129478793467_f64, 82.64892028539225_f64, 3.4908618824960684_f64),
    (35.707859649004625_f64, 91.09456669837583_f64, 3.5613029515922285_f64),
    (38.27494478516307_f64, 100.328119654307_f64, 3.6316752427823307_f64),
    (41.0265810582719_f64, 110.41903363389183_f64, 3.7019834478712035_f64),
    (43.97603609302721_f64, 121.44267749737259_f64, 3.772231933765613_f64),
    (47.13753134116719_f64, 133.4808258891994_f64, 3.842424765588153_f64),
    (50.526310653356795_f64, 146.62219073148074_f64, 3.9125657280698336_f64),
    (54.15871378079465_f64, 160.96299603045696_f64, 3.982658345358849_f64),
    (58.05225516094895_f64, 176.6075994766571_f64, 4.0527058993710465_f64),
    (62.22570836730231_f64, 193.66916459598175_f64, 4.1227114467965915_f64),
    (66.69919663030115_f64, 212.27038750736094_f64, 4.192677834867618_f64),
    (71.49428986597577_f64, 232.5442826644919_f64, 4.262607715982659_f64),
    (76.63410868007446_f64, 254.63503230634376_f64, 4.332503561275595_f64),
    (82.14343584919422_f64, 278.6989047156199_f64, 4.402367673209619_f64),
    (88.04883581643465_f64, 304.90524678823886_f64, 4.472202197269938_f64),
    (94.37878277775371_f64, 333.4375568525576_f64, 4.542009132823054_f64),
    (101.1637979766207_f64, 364.49464414685644_f64, 4.611790343204839_f64),
    (108.43659686896086_f64, 398.29188187027887_f64, 4.681547565094695_f64),
    (116.23224686798518_f64, 435.06256126885893_f64, 4.751282417228536_f64),
    (124.58833642950081_f64, 475.0593548074483_f64, 4.820996408499095_f64),
    (133.54515629298973_f64, 518.5558971137956_f64, 4.890690945488358_f64),
    (143.14589375234786_f64, 565.848493066131_f64, 4.960367339473379_f64),
    (153.436840893001_f64, 617.2579631343568_f64, 5.03002681294355_f64),
    (164.46761779946627_f64, 673.13163688153_f64, 5.099670505664568_f64),
    (176.2914118095948_f64, 733.8455063910553_f64, 5.169299480321525_f64),
    (188.96523396912076_f64, 799.8065523110178_f64, 5.238914727771253_f64),
    (202.55019392306664_f64, 871.4552562052747_f64, 5.30851717193169_f64),
    (217.1117945694501_f64, 949.2683139771112_f64, 5.3781076743339815_f64),
    (232.72024789604072_f64, 1033.7615662914993_f64, 5.447687038361195_f64),
    (249.45081352303166_f64, 1125.4931631725576_f64, 5.517256013195663_f64),
    (267.3841615839944_f64, 1225.0669813010995_f64, 5.586815297495455_f64),
    (286.606761694825_f64, 1333.1363139903424_f64, 5.656365542818916_f64),
    (307.2112998861753_f64, 1450.407855384282_f64, 5.725907356814867_f64),
    (329.2971255097148_f64, 1577.6460021117862_f64, 5.795441306194796_f64),
    (352.970730273065_f64, 1715.6774974491402_f64, 5.864967919502173_f64),
    (378.3462617131925_f64, 1865.396445005385_f64, 5.934487689692964_f64),
    (405.54607358408276_f64, 2027.769721058654_f64, 6.004001076540407_f64),
    (434.7013158125018_f64, 2203.842816950012_f64, 6.073508508876158_f64),
    (465.95256686646775_f64, 2394.7461453967853_f64, 6.143010386679125_f64),
    (499.450511585514_f64, 2601.7018472332034_f64, 6.212507083022421_f64),
    (535.3566677410719_f64, 2826.031137937914_f64, 6.28199894588822_f64),
    (573.8441648302393_f64, 3069.1622363806064_f64, 6.351486299859551_f64),
    (615.0985788580505_f64, 3332.6389215311597_f64, 6.42096944769746_f64),
    (659.3188271333541_f64, 3618.1297664429003_f64, 6.490448671811387_f64),
    (706.7181273927491_f64, 3927.4381026660217_f64, 6.5599242356300485_f64),
    (757.5250258771905_f64, 4262.512772389643_f64, 6.629396384879597_f64),
    (811.9844993184009_f64, 4625.459730074769_f64, 6.698865348775411_f64),
    (870.3591361485165_f64, 5018.55456014893_f64, 6.768331341133342_f64),
    (932.9304026284676_f64, 5444.255982515073_f64, 6.837794561405953_f64),
    (1000.0_f64, 5905.220423209181_f64, 6.907255195648812_f64),
];
