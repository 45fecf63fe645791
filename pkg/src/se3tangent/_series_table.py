"""Taylor coefficients in t = phi**2 of every kernel, rounded from exact rationals.

Generated by tools/generate_series_table.py; do not edit.
"""

COEFFS = {
    'alpha': (
        float.fromhex('0x1.0000000000000p+0'),
        float.fromhex('-0x1.5555555555555p-3'),
        float.fromhex('0x1.1111111111111p-7'),
        float.fromhex('-0x1.a01a01a01a01ap-13'),
        float.fromhex('0x1.71de3a556c734p-19'),
        float.fromhex('-0x1.ae64567f544e4p-26'),
        float.fromhex('0x1.6124613a86d09p-33'),
        float.fromhex('-0x1.ae7f3e733b81fp-41'),
        float.fromhex('0x1.952c77030ad4ap-49'),
        float.fromhex('-0x1.2f49b46814157p-57'),
        float.fromhex('0x1.71b8ef6dcf572p-66'),
        float.fromhex('-0x1.761b41316381ap-75'),
        float.fromhex('0x1.3f3ccdd165fa9p-84'),
        float.fromhex('-0x1.d1ab1c2dccea3p-94'),
        float.fromhex('0x1.259f98b4358adp-103'),
        float.fromhex('-0x1.434d2e783f5bcp-113'),
        float.fromhex('0x1.3981254dd0d52p-123'),
        float.fromhex('-0x1.0dc59c716d91fp-133'),
        float.fromhex('0x1.9ec8d1c94e85bp-144'),
        float.fromhex('-0x1.1e99449a4bacep-154'),
        float.fromhex('0x1.65e61c39d0241p-165'),
        float.fromhex('-0x1.95db45257e512p-176'),
        float.fromhex('0x1.a3cb872220648p-187'),
        float.fromhex('-0x1.8da8e0a127ebap-198'),
        float.fromhex('0x1.5a42f0dfeb086p-209'),
        float.fromhex('-0x1.161872bf7b823p-220'),
        float.fromhex('0x1.9d4f1058674dfp-232'),
        float.fromhex('-0x1.1d008faac5c50p-243'),
        float.fromhex('0x1.6db793c887b97p-255'),
        float.fromhex('-0x1.b5bfc17fa97d3p-267'),
        float.fromhex('0x1.e9e56d649f768p-279'),
        float.fromhex('-0x1.00dcf6a320e1cp-290'),
        float.fromhex('0x1.f9d2a2bb5471bp-303'),
        float.fromhex('-0x1.d48849da8f4a3p-315'),
        float.fromhex('0x1.99046602abcaep-327'),
        float.fromhex('-0x1.5116e3adb9fb9p-339'),
        float.fromhex('0x1.06b1981a48762p-351'),
        float.fromhex('-0x1.83bed30a49edfp-364'),
        float.fromhex('0x1.0f653132c5ae6p-376'),
        float.fromhex('-0x1.68cda75b82f10p-389'),
        float.fromhex('0x1.c8206e6fe560bp-402'),
        float.fromhex('-0x1.1281cd42368abp-414'),
    ),
    'beta': (
        float.fromhex('0x1.0000000000000p+0'),
        float.fromhex('-0x1.5555555555555p-4'),
        float.fromhex('0x1.6c16c16c16c17p-9'),
        float.fromhex('-0x1.a01a01a01a01ap-15'),
        float.fromhex('0x1.27e4fb7789f5cp-21'),
        float.fromhex('-0x1.1eed8eff8d898p-28'),
        float.fromhex('0x1.93974a8c07c9dp-36'),
        float.fromhex('-0x1.ae7f3e733b81fp-44'),
        float.fromhex('0x1.6827863b97d97p-52'),
        float.fromhex('-0x1.e542ba4020225p-61'),
        float.fromhex('0x1.0ce396db7f853p-69'),
        float.fromhex('-0x1.f2cf01972f578p-79'),
        float.fromhex('0x1.88e85fc6a4e5ap-88'),
        float.fromhex('-0x1.0a18a2635085dp-97'),
        float.fromhex('0x1.3932c5047d60ep-107'),
        float.fromhex('-0x1.434d2e783f5bcp-117'),
        float.fromhex('0x1.2710231c0fd7ap-127'),
        float.fromhex('-0x1.df983290c2ca9p-138'),
        float.fromhex('0x1.5d4acb9c0c3abp-148'),
        float.fromhex('-0x1.ca8ed42a12ae3p-159'),
        float.fromhex('0x1.10af527530de8p-169'),
        float.fromhex('-0x1.272b1b03fec6ap-180'),
        float.fromhex('0x1.240804f659510p-191'),
        float.fromhex('-0x1.091b406b6ff26p-202'),
        float.fromhex('0x1.bb36f6e12cd78p-214'),
        float.fromhex('-0x1.56457989358c9p-225'),
        float.fromhex('0x1.e9d8f6ed83eaap-237'),
        float.fromhex('-0x1.45b77f9e98e12p-248'),
        float.fromhex('0x1.938cc661b03f6p-260'),
        float.fromhex('-0x1.d2eeac43e7fcfp-272'),
        float.fromhex('0x1.f9b3059128bc7p-284'),
        float.fromhex('-0x1.00dcf6a320e1cp-295'),
        float.fromhex('0x1.ea7ead50ce01ap-308'),
        float.fromhex('-0x1.b8f8bdfae136cp-320'),
        float.fromhex('0x1.75f56494ba532p-332'),
        float.fromhex('-0x1.2ba2917dfaa6cp-344'),
        float.fromhex('0x1.c6639f500ea2dp-357'),
        float.fromhex('-0x1.4685bf3115d5dp-369'),
        float.fromhex('0x1.bd5dda94f5a18p-382'),
        float.fromhex('-0x1.20a485e2cf273p-394'),
        float.fromhex('0x1.64005631debbep-407'),
        float.fromhex('-0x1.a24be3711628bp-420'),
    ),
    'gamma': (
        float.fromhex('0x1.0000000000000p+0'),
        float.fromhex('-0x1.5555555555555p-4'),
        float.fromhex('-0x1.6c16c16c16c17p-10'),
        float.fromhex('-0x1.1566abc011567p-15'),
        float.fromhex('-0x1.bbd779334ef0bp-21'),
        float.fromhex('-0x1.66a8f2bf70ebep-26'),
        float.fromhex('-0x1.22805d644267fp-31'),
        float.fromhex('-0x1.d6db2c4e09162p-37'),
        float.fromhex('-0x1.7da4e1f79955cp-42'),
        float.fromhex('-0x1.355871d652e9ep-47'),
        float.fromhex('-0x1.f57d968caacf1p-53'),
        float.fromhex('-0x1.967e1f09c376fp-58'),
        float.fromhex('-0x1.497d9033a2b5cp-63'),
        float.fromhex('-0x1.0b132d7c6ad06p-68'),
        float.fromhex('-0x1.b0f72d59f1c16p-74'),
        float.fromhex('-0x1.5ef2da4cca26dp-79'),
        float.fromhex('-0x1.1c77df96de38bp-84'),
        float.fromhex('-0x1.cd299de521b62p-90'),
        float.fromhex('-0x1.75cde656574a7p-95'),
        float.fromhex('-0x1.2efe8db3b4adfp-100'),
        float.fromhex('-0x1.eb322904761ffp-106'),
        float.fromhex('-0x1.8e25ff9328464p-111'),
        float.fromhex('-0x1.42ba1a349b5d3p-116'),
        float.fromhex('-0x1.0597b61cb30d4p-121'),
        float.fromhex('-0x1.a813f6eaa7073p-127'),
        float.fromhex('-0x1.57bea2950f124p-132'),
        float.fromhex('-0x1.16a101c5fde97p-137'),
        float.fromhex('-0x1.c3b23b05e39f9p-143'),
        float.fromhex('-0x1.6e2193ae496d5p-148'),
        float.fromhex('-0x1.28c65557ea2a6p-153'),
        float.fromhex('-0x1.e11cf33c632a8p-159'),
        float.fromhex('-0x1.85f9bf8d6b2b2p-164'),
        float.fromhex('-0x1.3c1a3035e663dp-169'),
        float.fromhex('-0x1.00390e238ecb8p-174'),
        float.fromhex('-0x1.9f5f74b6c8690p-180'),
        float.fromhex('-0x1.50b0462832a12p-185'),
        float.fromhex('-0x1.10e8d36905d5ep-190'),
        float.fromhex('-0x1.ba6c96ed10bc4p-196'),
        float.fromhex('-0x1.669d9371721f7p-201'),
        float.fromhex('-0x1.22aecc05ace19p-206'),
        float.fromhex('-0x1.d73cb99591091p-212'),
        float.fromhex('-0x1.7df8723315bfcp-217'),
    ),
    'delta': (
        float.fromhex('0x1.5555555555555p-3'),
        float.fromhex('-0x1.1111111111111p-7'),
        float.fromhex('0x1.a01a01a01a01ap-13'),
        float.fromhex('-0x1.71de3a556c734p-19'),
        float.fromhex('0x1.ae64567f544e4p-26'),
        float.fromhex('-0x1.6124613a86d09p-33'),
        float.fromhex('0x1.ae7f3e733b81fp-41'),
        float.fromhex('-0x1.952c77030ad4ap-49'),
        float.fromhex('0x1.2f49b46814157p-57'),
        float.fromhex('-0x1.71b8ef6dcf572p-66'),
        float.fromhex('0x1.761b41316381ap-75'),
        float.fromhex('-0x1.3f3ccdd165fa9p-84'),
        float.fromhex('0x1.d1ab1c2dccea3p-94'),
        float.fromhex('-0x1.259f98b4358adp-103'),
        float.fromhex('0x1.434d2e783f5bcp-113'),
        float.fromhex('-0x1.3981254dd0d52p-123'),
        float.fromhex('0x1.0dc59c716d91fp-133'),
        float.fromhex('-0x1.9ec8d1c94e85bp-144'),
        float.fromhex('0x1.1e99449a4bacep-154'),
        float.fromhex('-0x1.65e61c39d0241p-165'),
        float.fromhex('0x1.95db45257e512p-176'),
        float.fromhex('-0x1.a3cb872220648p-187'),
        float.fromhex('0x1.8da8e0a127ebap-198'),
        float.fromhex('-0x1.5a42f0dfeb086p-209'),
        float.fromhex('0x1.161872bf7b823p-220'),
        float.fromhex('-0x1.9d4f1058674dfp-232'),
        float.fromhex('0x1.1d008faac5c50p-243'),
        float.fromhex('-0x1.6db793c887b97p-255'),
        float.fromhex('0x1.b5bfc17fa97d3p-267'),
        float.fromhex('-0x1.e9e56d649f768p-279'),
        float.fromhex('0x1.00dcf6a320e1cp-290'),
        float.fromhex('-0x1.f9d2a2bb5471bp-303'),
        float.fromhex('0x1.d48849da8f4a3p-315'),
        float.fromhex('-0x1.99046602abcaep-327'),
        float.fromhex('0x1.5116e3adb9fb9p-339'),
        float.fromhex('-0x1.06b1981a48762p-351'),
        float.fromhex('0x1.83bed30a49edfp-364'),
        float.fromhex('-0x1.0f653132c5ae6p-376'),
        float.fromhex('0x1.68cda75b82f10p-389'),
        float.fromhex('-0x1.c8206e6fe560bp-402'),
        float.fromhex('0x1.1281cd42368abp-414'),
        float.fromhex('-0x1.3af3de7343e26p-427'),
    ),
    'a1': (
        float.fromhex('0x1.0000000000000p-1'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('-0x1.6c16c16c16c17p-10'),
        float.fromhex('0x1.a01a01a01a01ap-15'),
        float.fromhex('-0x1.bbd779334ef0bp-21'),
        float.fromhex('0x1.1eed8eff8d898p-27'),
        float.fromhex('-0x1.f87d1d2f09bc4p-35'),
        float.fromhex('0x1.42df6ed66ca17p-42'),
        float.fromhex('-0x1.3b22957424de5p-50'),
        float.fromhex('0x1.e542ba4020225p-59'),
        float.fromhex('-0x1.2e8009b6ef75dp-67'),
        float.fromhex('0x1.37c160fe7d96bp-76'),
        float.fromhex('-0x1.0e1fc1d8915dep-85'),
        float.fromhex('0x1.8f24f394f8c8cp-95'),
        float.fromhex('-0x1.fcf280274bbd7p-105'),
        float.fromhex('0x1.1ae388a937705p-114'),
        float.fromhex('-0x1.149f20ea4eda2p-124'),
        float.fromhex('0x1.df983290c2ca9p-135'),
        float.fromhex('-0x1.731f7855ccfe6p-145'),
        float.fromhex('0x1.01f05757aa820p-155'),
        float.fromhex('-0x1.43d031eb2a084p-166'),
        float.fromhex('0x1.70f5e1c4fe785p-177'),
        float.fromhex('-0x1.7f4a8683553a6p-188'),
        float.fromhex('0x1.6c857893b9ed5p-199'),
        float.fromhex('-0x1.3e8f8171d83aep-210'),
        float.fromhex('0x1.00b41b26e8297p-221'),
        float.fromhex('-0x1.7eb180e98f0f5p-233'),
        float.fromhex('0x1.08a517b0dc36fp-244'),
        float.fromhex('-0x1.547ec7626cb58p-256'),
        float.fromhex('0x1.9890d6bb6afd6p-268'),
        float.fromhex('-0x1.ca4a3d0b8ceacp-280'),
        float.fromhex('0x1.e19e4e71dda74p-292'),
        float.fromhex('-0x1.db2ab7e647919p-304'),
        float.fromhex('0x1.b8f8bdfae136cp-316'),
        float.fromhex('-0x1.81a50fb96025bp-328'),
        float.fromhex('0x1.3e5cba95da513p-340'),
        float.fromhex('-0x1.f0fcf63f90021p-353'),
        float.fromhex('0x1.6f56771738909p-365'),
        float.fromhex('-0x1.017a425e1e016p-377'),
        float.fromhex('0x1.56c35efd55fe9p-390'),
        float.fromhex('-0x1.b1e0690cc774fp-403'),
        float.fromhex('0x1.056f6e26add97p-415'),
    ),
    'a2': (
        float.fromhex('0x1.5555555555555p-3'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('-0x1.a01a01a01a01ap-13'),
        float.fromhex('0x1.71de3a556c734p-18'),
        float.fromhex('-0x1.42cb40df7f3abp-24'),
        float.fromhex('0x1.6124613a86d09p-31'),
        float.fromhex('-0x1.0d0f870805313p-38'),
        float.fromhex('0x1.2fe15942481f8p-46'),
        float.fromhex('-0x1.09607ddb1192cp-54'),
        float.fromhex('0x1.71b8ef6dcf572p-63'),
        float.fromhex('-0x1.a4dea9578ff1dp-72'),
        float.fromhex('0x1.8f0c0145bf793p-81'),
        float.fromhex('-0x1.4025a35f7ce10p-90'),
        float.fromhex('0x1.b86f650e50504p-100'),
        float.fromhex('-0x1.06aeb5c1b37a9p-109'),
        float.fromhex('0x1.125100a416ba7p-119'),
        float.fromhex('-0x1.f9d28554ad71ap-130'),
        float.fromhex('0x1.9ec8d1c94e85bp-140'),
        float.fromhex('-0x1.3082d8e3f067bp-150'),
        float.fromhex('0x1.92a2dfc10a289p-161'),
        float.fromhex('-0x1.e1f4621c86006p-172'),
        float.fromhex('0x1.065f3475543edp-182'),
        float.fromhex('-0x1.04f6d369c232ap-193'),
        float.fromhex('0x1.dc1c0b33e32b8p-205'),
        float.fromhex('-0x1.8fc324f3418b3p-216'),
        float.fromhex('0x1.35fb4c424d7a7p-227'),
        float.fromhex('-0x1.bd50e07ad503dp-239'),
        float.fromhex('0x1.29252812ee46bp-250'),
        float.fromhex('-0x1.7159cb43b701ap-262'),
        float.fromhex('0x1.aca8bfb80b87bp-274'),
        float.fromhex('-0x1.d1907f07ab992p-286'),
        float.fromhex('0x1.da35788f9f2a9p-298'),
        float.fromhex('-0x1.c5e4078bbacfdp-310'),
        float.fromhex('0x1.99046602abcaep-322'),
        float.fromhex('-0x1.5b9f9acb27cb7p-334'),
        float.fromhex('0x1.171cb19becfd8p-346'),
        float.fromhex('-0x1.a818b6d340dc4p-359'),
        float.fromhex('0x1.3151d7591e643p-371'),
        float.fromhex('-0x1.a12dc981cf66ap-384'),
        float.fromhex('0x1.0ed3419270317p-396'),
        float.fromhex('-0x1.4e8e3228b2791p-409'),
        float.fromhex('0x1.89b0d61014db0p-422'),
    ),
    'a3': (
        float.fromhex('0x1.5555555555555p-5'),
        float.fromhex('-0x1.6c16c16c16c17p-9'),
        float.fromhex('0x1.3813813813814p-14'),
        float.fromhex('-0x1.27e4fb7789f5cp-20'),
        float.fromhex('0x1.66a8f2bf70ebep-27'),
        float.fromhex('-0x1.2eb177e905d76p-34'),
        float.fromhex('0x1.78af56a4d411bp-42'),
        float.fromhex('-0x1.6827863b97d97p-50'),
        float.fromhex('0x1.10f588c412135p-58'),
        float.fromhex('-0x1.501c7c925f667p-67'),
        float.fromhex('0x1.56ee5117f08c2p-76'),
        float.fromhex('-0x1.26ae47d4fbac3p-85'),
        float.fromhex('0x1.b06807e162d97p-95'),
        float.fromhex('-0x1.120c6c63edb4dp-104'),
        float.fromhex('0x1.2f185b90bb660p-114'),
        float.fromhex('-0x1.2710231c0fd7ap-124'),
        float.fromhex('0x1.fd91b5b9cef74p-135'),
        float.fromhex('-0x1.88f4250f8dc20p-145'),
        float.fromhex('0x1.1044cdf8fb177p-155'),
        float.fromhex('-0x1.54db27127d162p-166'),
        float.fromhex('0x1.836893753e64cp-177'),
        float.fromhex('-0x1.918b06d2bacf7p-188'),
        float.fromhex('0x1.7d172c9a70ec7p-199'),
        float.fromhex('-0x1.4c693928e1a1ap-210'),
        float.fromhex('0x1.0b6646f331d5dp-221'),
        float.fromhex('-0x1.8e0048a0fb2eap-233'),
        float.fromhex('0x1.12d2d3add0fe0p-244'),
        float.fromhex('-0x1.611b2d957a377p-256'),
        float.fromhex('0x1.a7284c1d8a3d4p-268'),
        float.fromhex('-0x1.da17d5381630ap-280'),
        float.fromhex('0x1.f1ac1ddc0fb56p-292'),
        float.fromhex('-0x1.ea7ead50ce01ap-304'),
        float.fromhex('0x1.c6c083eab8407p-316'),
        float.fromhex('-0x1.8d54bade05f85p-328'),
        float.fromhex('0x1.47b9cf21ca266p-340'),
        float.fromhex('-0x1.ff30133a10773p-353'),
        float.fromhex('0x1.798aa510c13f4p-365'),
        float.fromhex('-0x1.086fb9c871d7ep-377'),
        float.fromhex('0x1.5fc8832c6c77cp-390'),
        float.fromhex('-0x1.bd006bbe566adp-403'),
        float.fromhex('0x1.0bf89db472321p-415'),
        float.fromhex('-0x1.33a0cd5eb9602p-428'),
    ),
    'a4': (
        float.fromhex('0x1.1111111111111p-7'),
        float.fromhex('-0x1.a01a01a01a01ap-12'),
        float.fromhex('0x1.1566abc011567p-17'),
        float.fromhex('-0x1.ae64567f544e4p-24'),
        float.fromhex('0x1.b96d79892884cp-31'),
        float.fromhex('-0x1.42df6ed66ca17p-38'),
        float.fromhex('0x1.6286e822a97a1p-46'),
        float.fromhex('-0x1.2f49b46814157p-54'),
        float.fromhex('0x1.9ff00d5b89420p-63'),
        float.fromhex('-0x1.d3a2117dbc620p-72'),
        float.fromhex('0x1.b6f39affec388p-81'),
        float.fromhex('-0x1.5d40552259afap-90'),
        float.fromhex('0x1.dd235824d701ap-100'),
        float.fromhex('-0x1.1ae388a937705p-109'),
        float.fromhex('0x1.25e912f8f3c7dp-119'),
        float.fromhex('-0x1.0dc59c716d91fp-129'),
        float.fromhex('0x1.b8b55ee5e36e1p-140'),
        float.fromhex('-0x1.426c6d2d95228p-150'),
        float.fromhex('0x1.a9014184a72adp-161'),
        float.fromhex('-0x1.fb52166edde57p-172'),
        float.fromhex('0x1.137d90ae6541fp-182'),
        float.fromhex('-0x1.11641a6ecb720p-193'),
        float.fromhex('0x1.f1c03a41e1dc0p-205'),
        float.fromhex('-0x1.a124ac1f39435p-216'),
        float.fromhex('0x1.42e5c4c510b4ep-227'),
        float.fromhex('-0x1.cf20e97581602p-239'),
        float.fromhex('0x1.3492e4b132847p-250'),
        float.fromhex('-0x1.7f07c94fb44d8p-262'),
        float.fromhex('0x1.bbf7eb2330837p-274'),
        float.fromhex('-0x1.e19e4e71dda74p-286'),
        float.fromhex('0x1.ea040da579ce2p-298'),
        float.fromhex('-0x1.d48849da8f4a3p-310'),
        float.fromhex('0x1.a5cc8932c1294p-322'),
        float.fromhex('-0x1.662851e8959b5p-334'),
        float.fromhex('0x1.1f523e5cbf413p-346'),
        float.fromhex('-0x1.b436ad6b932bbp-359'),
        float.fromhex('0x1.39cd00e2b491ap-371'),
        float.fromhex('-0x1.ac7436bcab7e3p-384'),
        float.fromhex('0x1.15f3c34c2fc6fp-396'),
        float.fromhex('-0x1.57224092c42d6p-409'),
        float.fromhex('0x1.93887503aefa1p-422'),
        float.fromhex('-0x1.c49a31189b090p-435'),
    ),
    'b1': (
        float.fromhex('-0x1.0000000000000p-1'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('0x0.0p+0'),
    ),
    'b2': (
        float.fromhex('0x1.5555555555555p-4'),
        float.fromhex('0x0.0p+0'),
        float.fromhex('-0x1.1566abc011567p-15'),
        float.fromhex('-0x1.bbd779334ef0bp-20'),
        float.fromhex('-0x1.0cfeb60f94b0ep-24'),
        float.fromhex('-0x1.22805d644267fp-29'),
        float.fromhex('-0x1.2648fbb0c5addp-34'),
        float.fromhex('-0x1.1e3ba979b3005p-39'),
        float.fromhex('-0x1.0ead639b888cap-44'),
        float.fromhex('-0x1.f57d968caacf1p-50'),
        float.fromhex('-0x1.c94de2eafbe5dp-55'),
        float.fromhex('-0x1.9bdcf4408b634p-60'),
        float.fromhex('-0x1.6f3a5e8b12de9p-65'),
        float.fromhex('-0x1.44b9620375511p-70'),
        float.fromhex('-0x1.1d25515e643f9p-75'),
        float.fromhex('-0x1.f1d1c74804e33p-81'),
        float.fromhex('-0x1.b0570406cf9acp-86'),
        float.fromhex('-0x1.75cde656574a7p-91'),
        float.fromhex('-0x1.41ee768eeff8dp-96'),
        float.fromhex('-0x1.144c37128271fp-101'),
        float.fromhex('-0x1.d8cd1f7ebfd37p-107'),
        float.fromhex('-0x1.9368a0c1c2347p-112'),
        float.fromhex('-0x1.57571f05ab016p-117'),
        float.fromhex('-0x1.238db9c152d4fp-122'),
        float.fromhex('-0x1.ee2209b645aa3p-128'),
        float.fromhex('-0x1.a1f182a8fcde3p-133'),
        float.fromhex('-0x1.60e33e1c99d4bp-138'),
        float.fromhex('-0x1.297b47fd9ba8dp-143'),
        float.fromhex('-0x1.f4ceb0045b277p-149'),
        float.fromhex('-0x1.a4f954d4d6c53p-154'),
        float.fromhex('-0x1.616a5598291f1p-159'),
        float.fromhex('-0x1.28588d3287fd9p-164'),
        float.fromhex('-0x1.f06e8b64e4aa5p-170'),
        float.fromhex('-0x1.9f5f74b6c8690p-175'),
        float.fromhex('-0x1.5b35c85974362p-180'),
        float.fromhex('-0x1.21f7609f96334p-185'),
        float.fromhex('-0x1.e3e6c5134a4dfp-191'),
        float.fromhex('-0x1.937145dfa0635p-196'),
        float.fromhex('-0x1.501a1be68fe4dp-201'),
        float.fromhex('-0x1.17cc0e30ce1d6p-206'),
        float.fromhex('-0x1.d186cb2e4281bp-212'),
        float.fromhex('-0x1.83045bb2e5d12p-217'),
    ),
    'b4': (
        float.fromhex('-0x1.6c16c16c16c17p-10'),
        float.fromhex('-0x1.1566abc011567p-14'),
        float.fromhex('-0x1.4ce19ae67b348p-19'),
        float.fromhex('-0x1.66a8f2bf70ebep-24'),
        float.fromhex('-0x1.6b2074bd5301fp-29'),
        float.fromhex('-0x1.6124613a86d09p-34'),
        float.fromhex('-0x1.4df045b8a62b1p-39'),
        float.fromhex('-0x1.355871d652e9ep-44'),
        float.fromhex('-0x1.1a16a4af20147p-49'),
        float.fromhex('-0x1.fc1da6cc3454bp-55'),
        float.fromhex('-0x1.c50ca646ffb9fp-60'),
        float.fromhex('-0x1.909cc43aa0389p-65'),
        float.fromhex('-0x1.5fc8d4d9146d2p-70'),
        float.fromhex('-0x1.33147f0330e20p-75'),
        float.fromhex('-0x1.0ab0619d70552p-80'),
        float.fromhex('-0x1.cd299de521b62p-86'),
        float.fromhex('-0x1.8d2ac4bbbcbf1p-91'),
        float.fromhex('-0x1.54de5f6a2b43bp-96'),
        float.fromhex('-0x1.23a5c85aa622fp-101'),
        float.fromhex('-0x1.f1af7f77f257dp-107'),
        float.fromhex('-0x1.a79442650bea5p-112'),
        float.fromhex('-0x1.67b09a6776323p-117'),
        float.fromhex('-0x1.30ce5978a80d3p-122'),
        float.fromhex('-0x1.01cef9efcb4dbp-127'),
        float.fromhex('-0x1.b35b92c55cbccp-133'),
        float.fromhex('-0x1.6f00cff4c8f1ap-138'),
        float.fromhex('-0x1.34ec549b0df44p-143'),
        float.fromhex('-0x1.03ad8aacece51p-148'),
        float.fromhex('-0x1.b4023c6eb9de8p-154'),
        float.fromhex('-0x1.6d9a239494787p-159'),
        float.fromhex('-0x1.32395eb43730bp-164'),
        float.fromhex('-0x1.00390e238ecb8p-169'),
        float.fromhex('-0x1.ac5a705c7eac4p-175'),
        float.fromhex('-0x1.65bb4a8ab5cb3p-180'),
        float.fromhex('-0x1.2a7ea73ade61fp-185'),
        float.fromhex('-0x1.f1ba29cab2d3dp-191'),
        float.fromhex('-0x1.9ea6327b2bf45p-196'),
        float.fromhex('-0x1.592f9246bd4bep-201'),
        float.fromhex('-0x1.1f29011724618p-206'),
        float.fromhex('-0x1.dd768ebfdb2fap-212'),
        float.fromhex('-0x1.8cb144642b8ffp-217'),
        float.fromhex('-0x1.4963af436d9dap-222'),
    ),
    'abar1': (
        float.fromhex('0x0.0p+0'),
        float.fromhex('-0x1.6c16c16c16c17p-8'),
        float.fromhex('0x1.3813813813814p-12'),
        float.fromhex('-0x1.bbd779334ef0bp-18'),
        float.fromhex('0x1.66a8f2bf70ebep-24'),
        float.fromhex('-0x1.7a5dd5e3474d3p-31'),
        float.fromhex('0x1.1a8380fb9f0d4p-38'),
        float.fromhex('-0x1.3b22957424de5p-46'),
        float.fromhex('0x1.10f588c412135p-54'),
        float.fromhex('-0x1.7a200c24ab534p-63'),
        float.fromhex('0x1.aca9e55decaf3p-72'),
        float.fromhex('-0x1.952fa2c4da0ccp-81'),
        float.fromhex('0x1.444e05e90a232p-90'),
        float.fromhex('-0x1.bd5430226245cp-100'),
        float.fromhex('0x1.0935501ea3f94p-109'),
        float.fromhex('-0x1.149f20ea4eda2p-119'),
        float.fromhex('0x1.fd91b5b9cef74p-130'),
        float.fromhex('-0x1.a1836760869e2p-140'),
        float.fromhex('0x1.324d67b81a7a6p-150'),
        float.fromhex('-0x1.94c43e65f48a5p-161'),
        float.fromhex('0x1.e442b8528dfdep-172'),
        float.fromhex('-0x1.07833c7a4a982p-182'),
        float.fromhex('0x1.05ffeeaa2da29p-193'),
        float.fromhex('-0x1.ddd7422ac4586p-205'),
        float.fromhex('0x1.91196a6ccac0bp-216'),
        float.fromhex('-0x1.36f038bdc43c7p-227'),
        float.fromhex('0x1.be9697fa739cbp-239'),
        float.fromhex('-0x1.29eeee761f1edp-250'),
        float.fromhex('0x1.72434299d8f5ap-262'),
        float.fromhex('-0x1.ada5993ad41c1p-274'),
        float.fromhex('0x1.d2915bfe4eba0p-286'),
        float.fromhex('-0x1.db2ab7e647919p-298'),
        float.fromhex('0x1.c6c083eab8407p-310'),
        float.fromhex('-0x1.99bf60b4f6281p-322'),
        float.fromhex('0x1.5c356c13e6c8cp-334'),
        float.fromhex('-0x1.178e4a83c1013p-346'),
        float.fromhex('0x1.a8bbf9b2d9672p-359'),
        float.fromhex('-0x1.31c12ecfc3a1ap-371'),
        float.fromhex('0x1.a1be1bc4c0ce4p-384'),
        float.fromhex('-0x1.0f2c41a7fca92p-396'),
        float.fromhex('0x1.4ef6c5218ebe9p-409'),
        float.fromhex('-0x1.8a2607215d832p-422'),
    ),
    'abar2': (
        float.fromhex('0x0.0p+0'),
        float.fromhex('-0x1.a01a01a01a01ap-11'),
        float.fromhex('0x1.1566abc011567p-15'),
        float.fromhex('-0x1.42cb40df7f3abp-21'),
        float.fromhex('0x1.b96d79892884cp-28'),
        float.fromhex('-0x1.93974a8c07c9dp-35'),
        float.fromhex('0x1.09e52e19ff1b9p-42'),
        float.fromhex('-0x1.09607ddb1192cp-50'),
        float.fromhex('0x1.9ff00d5b89420p-59'),
        float.fromhex('-0x1.070b29d6b9f72p-67'),
        float.fromhex('0x1.125840dff3a35p-76'),
        float.fromhex('-0x1.e038750f3b518p-86'),
        float.fromhex('0x1.65da821ba1413p-95'),
        float.fromhex('-0x1.cbb1be12fa168p-105'),
        float.fromhex('0x1.012bf099d54edp-114'),
        float.fromhex('-0x1.f9d28554ad71ap-125'),
        float.fromhex('0x1.b8b55ee5e36e1p-135'),
        float.fromhex('-0x1.569334006e74ap-145'),
        float.fromhex('0x1.de2169b53c103p-156'),
        float.fromhex('-0x1.2d38bd51d3c03p-166'),
        float.fromhex('0x1.585cf4d9fe927p-177'),
        float.fromhex('-0x1.66d362b16b05ap-188'),
        float.fromhex('0x1.5634280d4b474p-199'),
        float.fromhex('-0x1.2bd25bb671286p-210'),
        float.fromhex('0x1.e458a727990f6p-222'),
        float.fromhex('-0x1.69d1b663cd132p-233'),
        float.fromhex('0x1.f56eb39ff2174p-245'),
        float.fromhex('-0x1.432e91db40216p-256'),
        float.fromhex('0x1.8478edbeca730p-268'),
        float.fromhex('-0x1.b477771730df9p-280'),
        float.fromhex('0x1.cb63cccb22314p-292'),
        float.fromhex('-0x1.c5e4078bbacfdp-304'),
        float.fromhex('0x1.a5cc8932c1294p-316'),
        float.fromhex('-0x1.71599477da483p-328'),
        float.fromhex('0x1.314762428b354p-340'),
        float.fromhex('-0x1.dd1bcdada8f7cp-353'),
        float.fromhex('0x1.6106a0ff0b23ep-365'),
        float.fromhex('-0x1.ef665f4a2649ep-378'),
        float.fromhex('0x1.4a1177ea78bc4p-390'),
        float.fromhex('-0x1.a231beb2df175p-403'),
        float.fromhex('0x1.f86a92449ab89p-416'),
        float.fromhex('-0x1.21f2c773c351cp-428'),
    ),
    'abar3': (
        float.fromhex('-0x1.6c16c16c16c17p-8'),
        float.fromhex('0x1.3813813813814p-12'),
        float.fromhex('-0x1.bbd779334ef0bp-18'),
        float.fromhex('0x1.66a8f2bf70ebep-24'),
        float.fromhex('-0x1.7a5dd5e3474d3p-31'),
        float.fromhex('0x1.1a8380fb9f0d4p-38'),
        float.fromhex('-0x1.3b22957424de5p-46'),
        float.fromhex('0x1.10f588c412135p-54'),
        float.fromhex('-0x1.7a200c24ab534p-63'),
        float.fromhex('0x1.aca9e55decaf3p-72'),
        float.fromhex('-0x1.952fa2c4da0ccp-81'),
        float.fromhex('0x1.444e05e90a232p-90'),
        float.fromhex('-0x1.bd5430226245cp-100'),
        float.fromhex('0x1.0935501ea3f94p-109'),
        float.fromhex('-0x1.149f20ea4eda2p-119'),
        float.fromhex('0x1.fd91b5b9cef74p-130'),
        float.fromhex('-0x1.a1836760869e2p-140'),
        float.fromhex('0x1.324d67b81a7a6p-150'),
        float.fromhex('-0x1.94c43e65f48a5p-161'),
        float.fromhex('0x1.e442b8528dfdep-172'),
        float.fromhex('-0x1.07833c7a4a982p-182'),
        float.fromhex('0x1.05ffeeaa2da29p-193'),
        float.fromhex('-0x1.ddd7422ac4586p-205'),
        float.fromhex('0x1.91196a6ccac0bp-216'),
        float.fromhex('-0x1.36f038bdc43c7p-227'),
        float.fromhex('0x1.be9697fa739cbp-239'),
        float.fromhex('-0x1.29eeee761f1edp-250'),
        float.fromhex('0x1.72434299d8f5ap-262'),
        float.fromhex('-0x1.ada5993ad41c1p-274'),
        float.fromhex('0x1.d2915bfe4eba0p-286'),
        float.fromhex('-0x1.db2ab7e647919p-298'),
        float.fromhex('0x1.c6c083eab8407p-310'),
        float.fromhex('-0x1.99bf60b4f6281p-322'),
        float.fromhex('0x1.5c356c13e6c8cp-334'),
        float.fromhex('-0x1.178e4a83c1013p-346'),
        float.fromhex('0x1.a8bbf9b2d9672p-359'),
        float.fromhex('-0x1.31c12ecfc3a1ap-371'),
        float.fromhex('0x1.a1be1bc4c0ce4p-384'),
        float.fromhex('-0x1.0f2c41a7fca92p-396'),
        float.fromhex('0x1.4ef6c5218ebe9p-409'),
        float.fromhex('-0x1.8a2607215d832p-422'),
        float.fromhex('0x1.ba50de869782fp-435'),
    ),
    'abar4': (
        float.fromhex('-0x1.a01a01a01a01ap-11'),
        float.fromhex('0x1.1566abc011567p-15'),
        float.fromhex('-0x1.42cb40df7f3abp-21'),
        float.fromhex('0x1.b96d79892884cp-28'),
        float.fromhex('-0x1.93974a8c07c9dp-35'),
        float.fromhex('0x1.09e52e19ff1b9p-42'),
        float.fromhex('-0x1.09607ddb1192cp-50'),
        float.fromhex('0x1.9ff00d5b89420p-59'),
        float.fromhex('-0x1.070b29d6b9f72p-67'),
        float.fromhex('0x1.125840dff3a35p-76'),
        float.fromhex('-0x1.e038750f3b518p-86'),
        float.fromhex('0x1.65da821ba1413p-95'),
        float.fromhex('-0x1.cbb1be12fa168p-105'),
        float.fromhex('0x1.012bf099d54edp-114'),
        float.fromhex('-0x1.f9d28554ad71ap-125'),
        float.fromhex('0x1.b8b55ee5e36e1p-135'),
        float.fromhex('-0x1.569334006e74ap-145'),
        float.fromhex('0x1.de2169b53c103p-156'),
        float.fromhex('-0x1.2d38bd51d3c03p-166'),
        float.fromhex('0x1.585cf4d9fe927p-177'),
        float.fromhex('-0x1.66d362b16b05ap-188'),
        float.fromhex('0x1.5634280d4b474p-199'),
        float.fromhex('-0x1.2bd25bb671286p-210'),
        float.fromhex('0x1.e458a727990f6p-222'),
        float.fromhex('-0x1.69d1b663cd132p-233'),
        float.fromhex('0x1.f56eb39ff2174p-245'),
        float.fromhex('-0x1.432e91db40216p-256'),
        float.fromhex('0x1.8478edbeca730p-268'),
        float.fromhex('-0x1.b477771730df9p-280'),
        float.fromhex('0x1.cb63cccb22314p-292'),
        float.fromhex('-0x1.c5e4078bbacfdp-304'),
        float.fromhex('0x1.a5cc8932c1294p-316'),
        float.fromhex('-0x1.71599477da483p-328'),
        float.fromhex('0x1.314762428b354p-340'),
        float.fromhex('-0x1.dd1bcdada8f7cp-353'),
        float.fromhex('0x1.6106a0ff0b23ep-365'),
        float.fromhex('-0x1.ef665f4a2649ep-378'),
        float.fromhex('0x1.4a1177ea78bc4p-390'),
        float.fromhex('-0x1.a231beb2df175p-403'),
        float.fromhex('0x1.f86a92449ab89p-416'),
        float.fromhex('-0x1.21f2c773c351cp-428'),
        float.fromhex('0x1.3e11e22d02867p-441'),
    ),
    'bbar2': (
        float.fromhex('0x0.0p+0'),
        float.fromhex('-0x1.1566abc011567p-13'),
        float.fromhex('-0x1.4ce19ae67b348p-17'),
        float.fromhex('-0x1.0cfeb60f94b0ep-21'),
        float.fromhex('-0x1.6b2074bd5301fp-26'),
        float.fromhex('-0x1.b96d79892884cp-31'),
        float.fromhex('-0x1.f4e86894f9409p-36'),
        float.fromhex('-0x1.0ead639b888cap-40'),
        float.fromhex('-0x1.1a16a4af20147p-45'),
        float.fromhex('-0x1.1dd0add2dd6fap-50'),
        float.fromhex('-0x1.1b27e7ec5fd43p-55'),
        float.fromhex('-0x1.136bc6e84e26ep-60'),
        float.fromhex('-0x1.07d69fa2cf51ep-65'),
        float.fromhex('-0x1.f3014e652f6f3p-71'),
        float.fromhex('-0x1.d2b4aad384950p-76'),
        float.fromhex('-0x1.b0570406cf9acp-81'),
        float.fromhex('-0x1.8d2ac4bbbcbf1p-86'),
        float.fromhex('-0x1.6a2c4560cdf7ep-91'),
        float.fromhex('-0x1.481a8165fae75p-96'),
        float.fromhex('-0x1.278033af37e42p-101'),
        float.fromhex('-0x1.08bca97f27727p-106'),
        float.fromhex('-0x1.d817caa7cb21ep-112'),
        float.fromhex('-0x1.a31bbb05e7121p-117'),
        float.fromhex('-0x1.72998748b43fap-122'),
        float.fromhex('-0x1.4684ae14058d9p-127'),
        float.fromhex('-0x1.1eb8a2773cfcdp-132'),
        float.fromhex('-0x1.f600097bf6acfp-138'),
        float.fromhex('-0x1.b634da03cfc28p-143'),
        float.fromhex('-0x1.7d81f4e0e2a2bp-148'),
        float.fromhex('-0x1.4b53b03ea68d2p-153'),
        float.fromhex('-0x1.1f15c8c8f3bdap-158'),
        float.fromhex('-0x1.f06e8b64e4aa5p-164'),
        float.fromhex('-0x1.ac5a705c7eac4p-169'),
        float.fromhex('-0x1.70e924df0b799p-174'),
        float.fromhex('-0x1.3d2691ae8c481p-179'),
        float.fromhex('-0x1.1031cedad9cbdp-184'),
        float.fromhex('-0x1.d27af8ca9172ep-190'),
        float.fromhex('-0x1.8f1f0121cadfcp-195'),
        float.fromhex('-0x1.5500b14b7b33dp-200'),
        float.fromhex('-0x1.22f43efce9911p-205'),
        float.fromhex('-0x1.efdd957d3673fp-211'),
        float.fromhex('-0x1.a607b88e64720p-216'),
    ),
    'bbar4': (
        float.fromhex('-0x1.1566abc011567p-13'),
        float.fromhex('-0x1.4ce19ae67b348p-17'),
        float.fromhex('-0x1.0cfeb60f94b0ep-21'),
        float.fromhex('-0x1.6b2074bd5301fp-26'),
        float.fromhex('-0x1.b96d79892884cp-31'),
        float.fromhex('-0x1.f4e86894f9409p-36'),
        float.fromhex('-0x1.0ead639b888cap-40'),
        float.fromhex('-0x1.1a16a4af20147p-45'),
        float.fromhex('-0x1.1dd0add2dd6fap-50'),
        float.fromhex('-0x1.1b27e7ec5fd43p-55'),
        float.fromhex('-0x1.136bc6e84e26ep-60'),
        float.fromhex('-0x1.07d69fa2cf51ep-65'),
        float.fromhex('-0x1.f3014e652f6f3p-71'),
        float.fromhex('-0x1.d2b4aad384950p-76'),
        float.fromhex('-0x1.b0570406cf9acp-81'),
        float.fromhex('-0x1.8d2ac4bbbcbf1p-86'),
        float.fromhex('-0x1.6a2c4560cdf7ep-91'),
        float.fromhex('-0x1.481a8165fae75p-96'),
        float.fromhex('-0x1.278033af37e42p-101'),
        float.fromhex('-0x1.08bca97f27727p-106'),
        float.fromhex('-0x1.d817caa7cb21ep-112'),
        float.fromhex('-0x1.a31bbb05e7121p-117'),
        float.fromhex('-0x1.72998748b43fap-122'),
        float.fromhex('-0x1.4684ae14058d9p-127'),
        float.fromhex('-0x1.1eb8a2773cfcdp-132'),
        float.fromhex('-0x1.f600097bf6acfp-138'),
        float.fromhex('-0x1.b634da03cfc28p-143'),
        float.fromhex('-0x1.7d81f4e0e2a2bp-148'),
        float.fromhex('-0x1.4b53b03ea68d2p-153'),
        float.fromhex('-0x1.1f15c8c8f3bdap-158'),
        float.fromhex('-0x1.f06e8b64e4aa5p-164'),
        float.fromhex('-0x1.ac5a705c7eac4p-169'),
        float.fromhex('-0x1.70e924df0b799p-174'),
        float.fromhex('-0x1.3d2691ae8c481p-179'),
        float.fromhex('-0x1.1031cedad9cbdp-184'),
        float.fromhex('-0x1.d27af8ca9172ep-190'),
        float.fromhex('-0x1.8f1f0121cadfcp-195'),
        float.fromhex('-0x1.5500b14b7b33dp-200'),
        float.fromhex('-0x1.22f43efce9911p-205'),
        float.fromhex('-0x1.efdd957d3673fp-211'),
        float.fromhex('-0x1.a607b88e64720p-216'),
        float.fromhex('-0x1.66c59645bf4bap-221'),
    ),
    'abreve1': (
        float.fromhex('-0x1.6c16c16c16c17p-7'),
        float.fromhex('0x1.3813813813814p-10'),
        float.fromhex('-0x1.4ce19ae67b348p-15'),
        float.fromhex('0x1.66a8f2bf70ebep-21'),
        float.fromhex('-0x1.d8f54b5c19208p-28'),
        float.fromhex('0x1.a7c541796e93fp-35'),
        float.fromhex('-0x1.13be42c5a0428p-42'),
        float.fromhex('0x1.10f588c412135p-50'),
        float.fromhex('-0x1.a9640da940bdbp-59'),
        float.fromhex('0x1.0bea2f5ab3ed8p-67'),
        float.fromhex('-0x1.1690bfe755e8dp-76'),
        float.fromhex('0x1.e67508dd8f34ap-86'),
        float.fromhex('-0x1.69d4671befd8bp-95'),
        float.fromhex('0x1.d01d4c359ef44p-105'),
        float.fromhex('-0x1.03552edba9ec8p-114'),
        float.fromhex('0x1.fd91b5b9cef74p-125'),
        float.fromhex('-0x1.bb9b9dd68f080p-135'),
        float.fromhex('0x1.589714af1dc9ap-145'),
        float.fromhex('-0x1.e0a90a1912644p-156'),
        float.fromhex('0x1.2ea9b33398bebp-166'),
        float.fromhex('-0x1.59dc3f6081e7ap-177'),
        float.fromhex('0x1.683fe829febf8p-188'),
        float.fromhex('-0x1.5772b78ebd1f8p-199'),
        float.fromhex('0x1.2cd30fd198109p-210'),
        float.fromhex('-0x1.e5d758a8829e7p-222'),
        float.fromhex('0x1.6ada5b7b7def5p-233'),
        float.fromhex('-0x1.f6c332675483fp-245'),
        float.fromhex('0x1.43fada469dd6ep-256'),
        float.fromhex('-0x1.855e12dd50397p-268'),
        float.fromhex('0x1.b568463e69ce6p-280'),
        float.fromhex('-0x1.cc51622715551p-292'),
        float.fromhex('0x1.c6c083eab8407p-304'),
        float.fromhex('-0x1.a68d5bba9dd95p-316'),
        float.fromhex('0x1.71f8c2d525355p-328'),
        float.fromhex('-0x1.31c3a1801b194p-340'),
        float.fromhex('0x1.ddd378e934941p-353'),
        float.fromhex('-0x1.61875e203a32ep-365'),
        float.fromhex('0x1.f011c0f9a4f4ep-378'),
        float.fromhex('-0x1.4a7df004bbee2p-390'),
        float.fromhex('0x1.a2b47669f26e3p-403'),
        float.fromhex('-0x1.f900b922bfd00p-416'),
        float.fromhex('0x1.22451208536dfp-428'),
    ),
    'abreve2': (
        float.fromhex('-0x1.a01a01a01a01ap-10'),
        float.fromhex('0x1.1566abc011567p-13'),
        float.fromhex('-0x1.e430e14f3ed80p-19'),
        float.fromhex('0x1.b96d79892884cp-25'),
        float.fromhex('-0x1.f87d1d2f09bc4p-32'),
        float.fromhex('0x1.8ed7c526fea95p-39'),
        float.fromhex('-0x1.d068dc3f5ec0dp-47'),
        float.fromhex('0x1.9ff00d5b89420p-55'),
        float.fromhex('-0x1.27ec8f1191360p-63'),
        float.fromhex('0x1.56ee5117f08c2p-72'),
        float.fromhex('-0x1.4a26d07a78c81p-81'),
        float.fromhex('0x1.0c63e194b8f0fp-90'),
        float.fromhex('-0x1.75806a6f6b324p-100'),
        float.fromhex('0x1.c20ce50d3549fp-110'),
        float.fromhex('-0x1.da355cff629a9p-120'),
        float.fromhex('0x1.b8b55ee5e36e1p-130'),
        float.fromhex('-0x1.6bfc6740755bfp-140'),
        float.fromhex('0x1.0cf2cb75f1c91p-150'),
        float.fromhex('-0x1.65b360d12b744p-161'),
        float.fromhex('0x1.ae7432107e370p-172'),
        float.fromhex('-0x1.d6f57188dc776p-183'),
        float.fromhex('0x1.d687b71247820p-194'),
        float.fromhex('-0x1.aefe63d642aa1p-205'),
        float.fromhex('0x1.6b427d5db2cb8p-216'),
        float.fromhex('-0x1.1aabd67df836fp-227'),
        float.fromhex('0x1.9769f1f1f4b2ep-239'),
        float.fromhex('-0x1.10af4b10fe1c3p-250'),
        float.fromhex('0x1.53e9d006f124ap-262'),
        float.fromhex('-0x1.8b8c43ed044aap-274'),
        float.fromhex('0x1.aead8ffe700e3p-286'),
        float.fromhex('-0x1.b7b4e74f5cf96p-298'),
        float.fromhex('0x1.a5cc8932c1294p-310'),
        float.fromhex('-0x1.7ce4611b991a7p-322'),
        float.fromhex('0x1.445bd866b3e8ap-334'),
        float.fromhex('-0x1.04eb347af8678p-346'),
        float.fromhex('0x1.8d27751eec885p-359'),
        float.fromhex('-0x1.1e672f16de22cp-371'),
        float.fromhex('0x1.87f4be666f5f8p-384'),
        float.fromhex('-0x1.fdaca069ffe46p-397'),
        float.fromhex('0x1.3b429b6ae0b36p-409'),
        float.fromhex('-0x1.737f0f8c5240cp-422'),
        float.fromhex('0x1.a17778db13507p-435'),
    ),
    'abreve3': (
        float.fromhex('0x1.3813813813814p-11'),
        float.fromhex('-0x1.bbd779334ef0bp-16'),
        float.fromhex('0x1.0cfeb60f94b0ep-21'),
        float.fromhex('-0x1.7a5dd5e3474d3p-28'),
        float.fromhex('0x1.6124613a86d09p-35'),
        float.fromhex('-0x1.d8b3e02e374d7p-43'),
        float.fromhex('0x1.ddadaf571fa1cp-51'),
        float.fromhex('-0x1.7a200c24ab534p-59'),
        float.fromhex('0x1.e23f2209aa451p-68'),
        float.fromhex('-0x1.fa7b8b7610900p-77'),
        float.fromhex('0x1.bdeb48206df04p-86'),
        float.fromhex('-0x1.4dff2419c9b45p-95'),
        float.fromhex('0x1.aef6a231ca751p-105'),
        float.fromhex('-0x1.e416799a09fdcp-115'),
        float.fromhex('0x1.ddb89a5e3207dp-125'),
        float.fromhex('-0x1.a1836760869e2p-135'),
        float.fromhex('0x1.45723e339c220p-145'),
        float.fromhex('-0x1.c75cc632b31b9p-156'),
        float.fromhex('0x1.1f879d71044ecp-166'),
        float.fromhex('-0x1.49640b98dd3e2p-177'),
        float.fromhex('0x1.57dfe93f5be56p-188'),
        float.fromhex('-0x1.4883fd7d66fccp-199'),
        float.fromhex('0x1.204a447e31ba8p-210'),
        float.fromhex('-0x1.d268551ca65aap-222'),
        float.fromhex('0x1.5ce5a6bbaa527p-233'),
        float.fromhex('-0x1.e424437ff2921p-245'),
        float.fromhex('0x1.3868c031cf0f4p-256'),
        float.fromhex('-0x1.77f0e61379989p-268'),
        float.fromhex('0x1.a6d3bb5e77589p-280'),
        float.fromhex('-0x1.bd780c67e3188p-292'),
        float.fromhex('0x1.b88a7fcb627e7p-304'),
        float.fromhex('-0x1.99bf60b4f6281p-316'),
        float.fromhex('0x1.6717177485ff1p-328'),
        float.fromhex('-0x1.29072f2bfd114p-340'),
        float.fromhex('0x1.d08d991b9dc8dp-353'),
        float.fromhex('-0x1.57f954a9bc15dp-365'),
        float.fromhex('0x1.e303d01b7eee7p-378'),
        float.fromhex('-0x1.42048df77c08dp-390'),
        float.fromhex('0x1.983cc040e5f84p-403'),
        float.fromhex('-0x1.ecaf88e9b4e3fp-416'),
        float.fromhex('0x1.1b5bce8e390fep-428'),
        float.fromhex('-0x1.37006b5f35ab4p-441'),
    ),
    'abreve4': (
        float.fromhex('0x1.1566abc011567p-14'),
        float.fromhex('-0x1.42cb40df7f3abp-19'),
        float.fromhex('0x1.4b121b26de639p-25'),
        float.fromhex('-0x1.93974a8c07c9dp-32'),
        float.fromhex('0x1.4c5e79a07ee27p-39'),
        float.fromhex('-0x1.8e10bcc89a5c2p-47'),
        float.fromhex('0x1.6bf20bb01819cp-55'),
        float.fromhex('-0x1.070b29d6b9f72p-63'),
        float.fromhex('0x1.34a348fbf217cp-72'),
        float.fromhex('-0x1.2c2349298512fp-81'),
        float.fromhex('0x1.ec0c72e5fdb9bp-91'),
        float.fromhex('-0x1.58c54e8e3b90ep-100'),
        float.fromhex('0x1.a1e766f9faa01p-110'),
        float.fromhex('-0x1.ba9834aa17c37p-120'),
        float.fromhex('0x1.9d2a08f785373p-130'),
        float.fromhex('-0x1.569334006e74ap-140'),
        float.fromhex('0x1.fc0380508fd13p-151'),
        float.fromhex('-0x1.52dfd4fc0e384p-161'),
        float.fromhex('0x1.98ee62c2de4dep-172'),
        float.fromhex('-0x1.c0883b5dc5c70p-183'),
        float.fromhex('0x1.c124749172cd9p-194'),
        float.fromhex('-0x1.9c413e1adb978p-205'),
        float.fromhex('0x1.5c1fb82476031p-216'),
        float.fromhex('-0x1.0f5d48cad9ce5p-227'),
        float.fromhex('0x1.87be7c54f5223p-239'),
        float.fromhex('-0x1.0695d682241b2p-250'),
        float.fromhex('0x1.47c60898fad10p-262'),
        float.fromhex('-0x1.7de888344ac3ap-274'),
        float.fromhex('0x1.a052719816fcap-286'),
        float.fromhex('-0x1.a985c712ff22ep-298'),
        float.fromhex('0x1.989e24e92b1ffp-310'),
        float.fromhex('-0x1.71599477da483p-322'),
        float.fromhex('0x1.3ad19d549f8efp-334'),
        float.fromhex('-0x1.faed8a8883874p-347'),
        float.fromhex('0x1.821f4016f42f4p-359'),
        float.fromhex('-0x1.16a99599b5899p-371'),
        float.fromhex('0x1.7da432a71b99ap-384'),
        float.fromhex('-0x1.f09b127468ebbp-397'),
        float.fromhex('0x1.3360f121ce488p-409'),
        float.fromhex('-0x1.6a6f7950b4263p-422'),
        float.fromhex('0x1.9786e9c9ab3c4p-435'),
        float.fromhex('-0x1.b573ee3cc7455p-448'),
    ),
    'bbreve2': (
        float.fromhex('-0x1.1566abc011567p-12'),
        float.fromhex('-0x1.4ce19ae67b348p-15'),
        float.fromhex('-0x1.937e11175f095p-19'),
        float.fromhex('-0x1.6b2074bd5301fp-23'),
        float.fromhex('-0x1.13e46bf5b952fp-27'),
        float.fromhex('-0x1.77ae4e6fbaf07p-32'),
        float.fromhex('-0x1.d9af6e502ef61p-37'),
        float.fromhex('-0x1.1a16a4af20147p-41'),
        float.fromhex('-0x1.418ac38d391d9p-46'),
        float.fromhex('-0x1.61f1e1e777c94p-51'),
        float.fromhex('-0x1.7ab4317f6b758p-56'),
        float.fromhex('-0x1.8bc1ef7436fadp-61'),
        float.fromhex('-0x1.95710fb2368a6p-66'),
        float.fromhex('-0x1.985e157914026p-71'),
        float.fromhex('-0x1.955193c662a11p-76'),
        float.fromhex('-0x1.8d2ac4bbbcbf1p-81'),
        float.fromhex('-0x1.80cf09b6dad76p-86'),
        float.fromhex('-0x1.711dd192ba444p-91'),
        float.fromhex('-0x1.5ee83d60125efp-96'),
        float.fromhex('-0x1.4aebd3def14f1p-101'),
        float.fromhex('-0x1.35cf9cfe1d4e4p-106'),
        float.fromhex('-0x1.202310940edc7p-111'),
        float.fromhex('-0x1.0a5e593c418dcp-116'),
        float.fromhex('-0x1.e9c7051e08546p-122'),
        float.fromhex('-0x1.c0007dda4f4b0p-127'),
        float.fromhex('-0x1.97e007b4b86c8p-132'),
        float.fromhex('-0x1.71bc97f3374c2p-137'),
        float.fromhex('-0x1.4dd1b644c64e6p-142'),
        float.fromhex('-0x1.2c43d7b8c6efep-147'),
        float.fromhex('-0x1.0d246c3c6481dp-152'),
        float.fromhex('-0x1.e0eb1709bd850p-158'),
        float.fromhex('-0x1.ac5a705c7eac4p-163'),
        float.fromhex('-0x1.7c706e0603d55p-168'),
        float.fromhex('-0x1.50f8fac9750c9p-173'),
        float.fromhex('-0x1.29b67a3f5e36fp-178'),
        float.fromhex('-0x1.06652bf1f1d0ap-183'),
        float.fromhex('-0x1.cd7bd94f1292bp-189'),
        float.fromhex('-0x1.94f0d289a24d8p-194'),
        float.fromhex('-0x1.6299acc43ca8cp-199'),
        float.fromhex('-0x1.35ea7d6e42087p-204'),
        float.fromhex('-0x1.0e5cf23b38590p-209'),
        float.fromhex('-0x1.d6e3553b8b134p-215'),
    ),
    'bbreve4': (
        float.fromhex('-0x1.4ce19ae67b348p-16'),
        float.fromhex('-0x1.0cfeb60f94b0ep-19'),
        float.fromhex('-0x1.1058578dfe417p-23'),
        float.fromhex('-0x1.b96d79892884cp-28'),
        float.fromhex('-0x1.3911415d1bc86p-32'),
        float.fromhex('-0x1.960415694cd2fp-37'),
        float.fromhex('-0x1.eda7a0327823dp-42'),
        float.fromhex('-0x1.1dd0add2dd6fap-46'),
        float.fromhex('-0x1.3e8ce4e9ebcecp-51'),
        float.fromhex('-0x1.5846b8a261b0ap-56'),
        float.fromhex('-0x1.6ac71b7fdd109p-61'),
        float.fromhex('-0x1.7640facbe3937p-66'),
        float.fromhex('-0x1.7b32cacbdbb91p-71'),
        float.fromhex('-0x1.7a4c2385f5a76p-76'),
        float.fromhex('-0x1.7458187000f32p-81'),
        float.fromhex('-0x1.6a2c4560cdf7ep-86'),
        float.fromhex('-0x1.5c9c297c5a95dp-91'),
        float.fromhex('-0x1.4c703a251ee0bp-96'),
        float.fromhex('-0x1.3a600946fed7ep-101'),
        float.fromhex('-0x1.270edea8def53p-106'),
        float.fromhex('-0x1.130a32bbdfa3ep-111'),
        float.fromhex('-0x1.fd931a03f7d78p-117'),
        float.fromhex('-0x1.d55eba3cc7fb8p-122'),
        float.fromhex('-0x1.ae14f3b2db7b3p-127'),
        float.fromhex('-0x1.88300768d8b71p-132'),
        float.fromhex('-0x1.640af12318ce1p-137'),
        float.fromhex('-0x1.41e5a69dbf395p-142'),
        float.fromhex('-0x1.21e93a36d1bb8p-147'),
        float.fromhex('-0x1.042bbdf61ce3ep-152'),
        float.fromhex('-0x1.d167a2ae965fbp-158'),
        float.fromhex('-0x1.9ef79cd99ab6ep-163'),
        float.fromhex('-0x1.70e924df0b799p-168'),
        float.fromhex('-0x1.470fc63c00aa5p-173'),
        float.fromhex('-0x1.2134ebc887689p-178'),
        float.fromhex('-0x1.fe36801d8f15ap-184'),
        float.fromhex('-0x1.c102e146043bbp-189'),
        float.fromhex('-0x1.8a48ccff4673ep-194'),
        float.fromhex('-0x1.59820acc555c4p-199'),
        float.fromhex('-0x1.2e2b07184d2eap-204'),
        float.fromhex('-0x1.07c4d358fec74p-209'),
        float.fromhex('-0x1.cbad28895d18ep-215'),
        float.fromhex('-0x1.8fdcf0808066fp-220'),
    ),
    'so3_dexp_quad': (
        float.fromhex('0x1.5555555555555p-3'),
        float.fromhex('-0x1.1111111111111p-7'),
        float.fromhex('0x1.a01a01a01a01ap-13'),
        float.fromhex('-0x1.71de3a556c734p-19'),
        float.fromhex('0x1.ae64567f544e4p-26'),
        float.fromhex('-0x1.6124613a86d09p-33'),
        float.fromhex('0x1.ae7f3e733b81fp-41'),
        float.fromhex('-0x1.952c77030ad4ap-49'),
        float.fromhex('0x1.2f49b46814157p-57'),
        float.fromhex('-0x1.71b8ef6dcf572p-66'),
        float.fromhex('0x1.761b41316381ap-75'),
        float.fromhex('-0x1.3f3ccdd165fa9p-84'),
        float.fromhex('0x1.d1ab1c2dccea3p-94'),
        float.fromhex('-0x1.259f98b4358adp-103'),
        float.fromhex('0x1.434d2e783f5bcp-113'),
        float.fromhex('-0x1.3981254dd0d52p-123'),
        float.fromhex('0x1.0dc59c716d91fp-133'),
        float.fromhex('-0x1.9ec8d1c94e85bp-144'),
        float.fromhex('0x1.1e99449a4bacep-154'),
        float.fromhex('-0x1.65e61c39d0241p-165'),
        float.fromhex('0x1.95db45257e512p-176'),
        float.fromhex('-0x1.a3cb872220648p-187'),
        float.fromhex('0x1.8da8e0a127ebap-198'),
        float.fromhex('-0x1.5a42f0dfeb086p-209'),
        float.fromhex('0x1.161872bf7b823p-220'),
        float.fromhex('-0x1.9d4f1058674dfp-232'),
        float.fromhex('0x1.1d008faac5c50p-243'),
        float.fromhex('-0x1.6db793c887b97p-255'),
        float.fromhex('0x1.b5bfc17fa97d3p-267'),
        float.fromhex('-0x1.e9e56d649f768p-279'),
        float.fromhex('0x1.00dcf6a320e1cp-290'),
        float.fromhex('-0x1.f9d2a2bb5471bp-303'),
        float.fromhex('0x1.d48849da8f4a3p-315'),
        float.fromhex('-0x1.99046602abcaep-327'),
        float.fromhex('0x1.5116e3adb9fb9p-339'),
        float.fromhex('-0x1.06b1981a48762p-351'),
        float.fromhex('0x1.83bed30a49edfp-364'),
        float.fromhex('-0x1.0f653132c5ae6p-376'),
        float.fromhex('0x1.68cda75b82f10p-389'),
        float.fromhex('-0x1.c8206e6fe560bp-402'),
        float.fromhex('0x1.1281cd42368abp-414'),
        float.fromhex('-0x1.3af3de7343e26p-427'),
    ),
    'so3_dexpinv_quad': (
        float.fromhex('0x1.5555555555555p-4'),
        float.fromhex('0x1.6c16c16c16c17p-10'),
        float.fromhex('0x1.1566abc011567p-15'),
        float.fromhex('0x1.bbd779334ef0bp-21'),
        float.fromhex('0x1.66a8f2bf70ebep-26'),
        float.fromhex('0x1.22805d644267fp-31'),
        float.fromhex('0x1.d6db2c4e09162p-37'),
        float.fromhex('0x1.7da4e1f79955cp-42'),
        float.fromhex('0x1.355871d652e9ep-47'),
        float.fromhex('0x1.f57d968caacf1p-53'),
        float.fromhex('0x1.967e1f09c376fp-58'),
        float.fromhex('0x1.497d9033a2b5cp-63'),
        float.fromhex('0x1.0b132d7c6ad06p-68'),
        float.fromhex('0x1.b0f72d59f1c16p-74'),
        float.fromhex('0x1.5ef2da4cca26dp-79'),
        float.fromhex('0x1.1c77df96de38bp-84'),
        float.fromhex('0x1.cd299de521b62p-90'),
        float.fromhex('0x1.75cde656574a7p-95'),
        float.fromhex('0x1.2efe8db3b4adfp-100'),
        float.fromhex('0x1.eb322904761ffp-106'),
        float.fromhex('0x1.8e25ff9328464p-111'),
        float.fromhex('0x1.42ba1a349b5d3p-116'),
        float.fromhex('0x1.0597b61cb30d4p-121'),
        float.fromhex('0x1.a813f6eaa7073p-127'),
        float.fromhex('0x1.57bea2950f124p-132'),
        float.fromhex('0x1.16a101c5fde97p-137'),
        float.fromhex('0x1.c3b23b05e39f9p-143'),
        float.fromhex('0x1.6e2193ae496d5p-148'),
        float.fromhex('0x1.28c65557ea2a6p-153'),
        float.fromhex('0x1.e11cf33c632a8p-159'),
        float.fromhex('0x1.85f9bf8d6b2b2p-164'),
        float.fromhex('0x1.3c1a3035e663dp-169'),
        float.fromhex('0x1.00390e238ecb8p-174'),
        float.fromhex('0x1.9f5f74b6c8690p-180'),
        float.fromhex('0x1.50b0462832a12p-185'),
        float.fromhex('0x1.10e8d36905d5ep-190'),
        float.fromhex('0x1.ba6c96ed10bc4p-196'),
        float.fromhex('0x1.669d9371721f7p-201'),
        float.fromhex('0x1.22aecc05ace19p-206'),
        float.fromhex('0x1.d73cb99591091p-212'),
        float.fromhex('0x1.7df8723315bfcp-217'),
        float.fromhex('0x1.359d1628b7da8p-222'),
    ),
    'blk_alpha_beta': (
        float.fromhex('-0x1.5555555555555p-4'),
        float.fromhex('0x1.6c16c16c16c17p-8'),
        float.fromhex('-0x1.3813813813814p-13'),
        float.fromhex('0x1.27e4fb7789f5cp-19'),
        float.fromhex('-0x1.66a8f2bf70ebep-26'),
        float.fromhex('0x1.2eb177e905d76p-33'),
        float.fromhex('-0x1.78af56a4d411bp-41'),
        float.fromhex('0x1.6827863b97d97p-49'),
        float.fromhex('-0x1.10f588c412135p-57'),
        float.fromhex('0x1.501c7c925f667p-66'),
        float.fromhex('-0x1.56ee5117f08c2p-75'),
        float.fromhex('0x1.26ae47d4fbac3p-84'),
        float.fromhex('-0x1.b06807e162d97p-94'),
        float.fromhex('0x1.120c6c63edb4dp-103'),
        float.fromhex('-0x1.2f185b90bb660p-113'),
        float.fromhex('0x1.2710231c0fd7ap-123'),
        float.fromhex('-0x1.fd91b5b9cef74p-134'),
        float.fromhex('0x1.88f4250f8dc20p-144'),
        float.fromhex('-0x1.1044cdf8fb177p-154'),
        float.fromhex('0x1.54db27127d162p-165'),
        float.fromhex('-0x1.836893753e64cp-176'),
        float.fromhex('0x1.918b06d2bacf7p-187'),
        float.fromhex('-0x1.7d172c9a70ec7p-198'),
        float.fromhex('0x1.4c693928e1a1ap-209'),
        float.fromhex('-0x1.0b6646f331d5dp-220'),
        float.fromhex('0x1.8e0048a0fb2eap-232'),
        float.fromhex('-0x1.12d2d3add0fe0p-243'),
        float.fromhex('0x1.611b2d957a377p-255'),
        float.fromhex('-0x1.a7284c1d8a3d4p-267'),
        float.fromhex('0x1.da17d5381630ap-279'),
        float.fromhex('-0x1.f1ac1ddc0fb56p-291'),
        float.fromhex('0x1.ea7ead50ce01ap-303'),
        float.fromhex('-0x1.c6c083eab8407p-315'),
        float.fromhex('0x1.8d54bade05f85p-327'),
        float.fromhex('-0x1.47b9cf21ca266p-339'),
        float.fromhex('0x1.ff30133a10773p-352'),
        float.fromhex('-0x1.798aa510c13f4p-364'),
        float.fromhex('0x1.086fb9c871d7ep-376'),
        float.fromhex('-0x1.5fc8832c6c77cp-389'),
        float.fromhex('0x1.bd006bbe566adp-402'),
        float.fromhex('-0x1.0bf89db472321p-414'),
        float.fromhex('0x1.33a0cd5eb9602p-427'),
    ),
    'blk_beta_delta': (
        float.fromhex('-0x1.1111111111111p-6'),
        float.fromhex('0x1.a01a01a01a01ap-11'),
        float.fromhex('-0x1.1566abc011567p-16'),
        float.fromhex('0x1.ae64567f544e4p-23'),
        float.fromhex('-0x1.b96d79892884cp-30'),
        float.fromhex('0x1.42df6ed66ca17p-37'),
        float.fromhex('-0x1.6286e822a97a1p-45'),
        float.fromhex('0x1.2f49b46814157p-53'),
        float.fromhex('-0x1.9ff00d5b89420p-62'),
        float.fromhex('0x1.d3a2117dbc620p-71'),
        float.fromhex('-0x1.b6f39affec388p-80'),
        float.fromhex('0x1.5d40552259afap-89'),
        float.fromhex('-0x1.dd235824d701ap-99'),
        float.fromhex('0x1.1ae388a937705p-108'),
        float.fromhex('-0x1.25e912f8f3c7dp-118'),
        float.fromhex('0x1.0dc59c716d91fp-128'),
        float.fromhex('-0x1.b8b55ee5e36e1p-139'),
        float.fromhex('0x1.426c6d2d95228p-149'),
        float.fromhex('-0x1.a9014184a72adp-160'),
        float.fromhex('0x1.fb52166edde57p-171'),
        float.fromhex('-0x1.137d90ae6541fp-181'),
        float.fromhex('0x1.11641a6ecb720p-192'),
        float.fromhex('-0x1.f1c03a41e1dc0p-204'),
        float.fromhex('0x1.a124ac1f39435p-215'),
        float.fromhex('-0x1.42e5c4c510b4ep-226'),
        float.fromhex('0x1.cf20e97581602p-238'),
        float.fromhex('-0x1.3492e4b132847p-249'),
        float.fromhex('0x1.7f07c94fb44d8p-261'),
        float.fromhex('-0x1.bbf7eb2330837p-273'),
        float.fromhex('0x1.e19e4e71dda74p-285'),
        float.fromhex('-0x1.ea040da579ce2p-297'),
        float.fromhex('0x1.d48849da8f4a3p-309'),
        float.fromhex('-0x1.a5cc8932c1294p-321'),
        float.fromhex('0x1.662851e8959b5p-333'),
        float.fromhex('-0x1.1f523e5cbf413p-345'),
        float.fromhex('0x1.b436ad6b932bbp-358'),
        float.fromhex('-0x1.39cd00e2b491ap-370'),
        float.fromhex('0x1.ac7436bcab7e3p-383'),
        float.fromhex('-0x1.15f3c34c2fc6fp-395'),
        float.fromhex('0x1.57224092c42d6p-408'),
        float.fromhex('-0x1.93887503aefa1p-421'),
        float.fromhex('0x1.c49a31189b090p-434'),
    ),
    'blk_xx_lin': (
        float.fromhex('0x1.6c16c16c16c17p-7'),
        float.fromhex('-0x1.3813813813814p-11'),
        float.fromhex('0x1.bbd779334ef0bp-17'),
        float.fromhex('-0x1.66a8f2bf70ebep-23'),
        float.fromhex('0x1.7a5dd5e3474d3p-30'),
        float.fromhex('-0x1.1a8380fb9f0d4p-37'),
        float.fromhex('0x1.3b22957424de5p-45'),
        float.fromhex('-0x1.10f588c412135p-53'),
        float.fromhex('0x1.7a200c24ab534p-62'),
        float.fromhex('-0x1.aca9e55decaf3p-71'),
        float.fromhex('0x1.952fa2c4da0ccp-80'),
        float.fromhex('-0x1.444e05e90a232p-89'),
        float.fromhex('0x1.bd5430226245cp-99'),
        float.fromhex('-0x1.0935501ea3f94p-108'),
        float.fromhex('0x1.149f20ea4eda2p-118'),
        float.fromhex('-0x1.fd91b5b9cef74p-129'),
        float.fromhex('0x1.a1836760869e2p-139'),
        float.fromhex('-0x1.324d67b81a7a6p-149'),
        float.fromhex('0x1.94c43e65f48a5p-160'),
        float.fromhex('-0x1.e442b8528dfdep-171'),
        float.fromhex('0x1.07833c7a4a982p-181'),
        float.fromhex('-0x1.05ffeeaa2da29p-192'),
        float.fromhex('0x1.ddd7422ac4586p-204'),
        float.fromhex('-0x1.91196a6ccac0bp-215'),
        float.fromhex('0x1.36f038bdc43c7p-226'),
        float.fromhex('-0x1.be9697fa739cbp-238'),
        float.fromhex('0x1.29eeee761f1edp-249'),
        float.fromhex('-0x1.72434299d8f5ap-261'),
        float.fromhex('0x1.ada5993ad41c1p-273'),
        float.fromhex('-0x1.d2915bfe4eba0p-285'),
        float.fromhex('0x1.db2ab7e647919p-297'),
        float.fromhex('-0x1.c6c083eab8407p-309'),
        float.fromhex('0x1.99bf60b4f6281p-321'),
        float.fromhex('-0x1.5c356c13e6c8cp-333'),
        float.fromhex('0x1.178e4a83c1013p-345'),
        float.fromhex('-0x1.a8bbf9b2d9672p-358'),
        float.fromhex('0x1.31c12ecfc3a1ap-370'),
        float.fromhex('-0x1.a1be1bc4c0ce4p-383'),
        float.fromhex('0x1.0f2c41a7fca92p-395'),
        float.fromhex('-0x1.4ef6c5218ebe9p-408'),
        float.fromhex('0x1.8a2607215d832p-421'),
        float.fromhex('-0x1.ba50de869782fp-434'),
    ),
    'blk_xx_quad': (
        float.fromhex('0x1.a01a01a01a01ap-10'),
        float.fromhex('-0x1.1566abc011567p-14'),
        float.fromhex('0x1.42cb40df7f3abp-20'),
        float.fromhex('-0x1.b96d79892884cp-27'),
        float.fromhex('0x1.93974a8c07c9dp-34'),
        float.fromhex('-0x1.09e52e19ff1b9p-41'),
        float.fromhex('0x1.09607ddb1192cp-49'),
        float.fromhex('-0x1.9ff00d5b89420p-58'),
        float.fromhex('0x1.070b29d6b9f72p-66'),
        float.fromhex('-0x1.125840dff3a35p-75'),
        float.fromhex('0x1.e038750f3b518p-85'),
        float.fromhex('-0x1.65da821ba1413p-94'),
        float.fromhex('0x1.cbb1be12fa168p-104'),
        float.fromhex('-0x1.012bf099d54edp-113'),
        float.fromhex('0x1.f9d28554ad71ap-124'),
        float.fromhex('-0x1.b8b55ee5e36e1p-134'),
        float.fromhex('0x1.569334006e74ap-144'),
        float.fromhex('-0x1.de2169b53c103p-155'),
        float.fromhex('0x1.2d38bd51d3c03p-165'),
        float.fromhex('-0x1.585cf4d9fe927p-176'),
        float.fromhex('0x1.66d362b16b05ap-187'),
        float.fromhex('-0x1.5634280d4b474p-198'),
        float.fromhex('0x1.2bd25bb671286p-209'),
        float.fromhex('-0x1.e458a727990f6p-221'),
        float.fromhex('0x1.69d1b663cd132p-232'),
        float.fromhex('-0x1.f56eb39ff2174p-244'),
        float.fromhex('0x1.432e91db40216p-255'),
        float.fromhex('-0x1.8478edbeca730p-267'),
        float.fromhex('0x1.b477771730df9p-279'),
        float.fromhex('-0x1.cb63cccb22314p-291'),
        float.fromhex('0x1.c5e4078bbacfdp-303'),
        float.fromhex('-0x1.a5cc8932c1294p-315'),
        float.fromhex('0x1.71599477da483p-327'),
        float.fromhex('-0x1.314762428b354p-339'),
        float.fromhex('0x1.dd1bcdada8f7cp-352'),
        float.fromhex('-0x1.6106a0ff0b23ep-364'),
        float.fromhex('0x1.ef665f4a2649ep-377'),
        float.fromhex('-0x1.4a1177ea78bc4p-389'),
        float.fromhex('0x1.a231beb2df175p-402'),
        float.fromhex('-0x1.f86a92449ab89p-415'),
        float.fromhex('0x1.21f2c773c351cp-427'),
        float.fromhex('-0x1.3e11e22d02867p-440'),
    ),
    'blk_inv_quad': (
        float.fromhex('0x1.6c16c16c16c17p-9'),
        float.fromhex('0x1.1566abc011567p-13'),
        float.fromhex('0x1.4ce19ae67b348p-18'),
        float.fromhex('0x1.66a8f2bf70ebep-23'),
        float.fromhex('0x1.6b2074bd5301fp-28'),
        float.fromhex('0x1.6124613a86d09p-33'),
        float.fromhex('0x1.4df045b8a62b1p-38'),
        float.fromhex('0x1.355871d652e9ep-43'),
        float.fromhex('0x1.1a16a4af20147p-48'),
        float.fromhex('0x1.fc1da6cc3454bp-54'),
        float.fromhex('0x1.c50ca646ffb9fp-59'),
        float.fromhex('0x1.909cc43aa0389p-64'),
        float.fromhex('0x1.5fc8d4d9146d2p-69'),
        float.fromhex('0x1.33147f0330e20p-74'),
        float.fromhex('0x1.0ab0619d70552p-79'),
        float.fromhex('0x1.cd299de521b62p-85'),
        float.fromhex('0x1.8d2ac4bbbcbf1p-90'),
        float.fromhex('0x1.54de5f6a2b43bp-95'),
        float.fromhex('0x1.23a5c85aa622fp-100'),
        float.fromhex('0x1.f1af7f77f257dp-106'),
        float.fromhex('0x1.a79442650bea5p-111'),
        float.fromhex('0x1.67b09a6776323p-116'),
        float.fromhex('0x1.30ce5978a80d3p-121'),
        float.fromhex('0x1.01cef9efcb4dbp-126'),
        float.fromhex('0x1.b35b92c55cbccp-132'),
        float.fromhex('0x1.6f00cff4c8f1ap-137'),
        float.fromhex('0x1.34ec549b0df44p-142'),
        float.fromhex('0x1.03ad8aacece51p-147'),
        float.fromhex('0x1.b4023c6eb9de8p-153'),
        float.fromhex('0x1.6d9a239494787p-158'),
        float.fromhex('0x1.32395eb43730bp-163'),
        float.fromhex('0x1.00390e238ecb8p-168'),
        float.fromhex('0x1.ac5a705c7eac4p-174'),
        float.fromhex('0x1.65bb4a8ab5cb3p-179'),
        float.fromhex('0x1.2a7ea73ade61fp-184'),
        float.fromhex('0x1.f1ba29cab2d3dp-190'),
        float.fromhex('0x1.9ea6327b2bf45p-195'),
        float.fromhex('0x1.592f9246bd4bep-200'),
        float.fromhex('0x1.1f29011724618p-205'),
        float.fromhex('0x1.dd768ebfdb2fap-211'),
        float.fromhex('0x1.8cb144642b8ffp-216'),
        float.fromhex('0x1.4963af436d9dap-221'),
    ),
    'blk_inv_dquad': (
        float.fromhex('0x1.6c16c16c16c17p-9'),
        float.fromhex('0x1.1566abc011567p-13'),
        float.fromhex('0x1.4ce19ae67b348p-18'),
        float.fromhex('0x1.66a8f2bf70ebep-23'),
        float.fromhex('0x1.6b2074bd5301fp-28'),
        float.fromhex('0x1.6124613a86d09p-33'),
        float.fromhex('0x1.4df045b8a62b1p-38'),
        float.fromhex('0x1.355871d652e9ep-43'),
        float.fromhex('0x1.1a16a4af20147p-48'),
        float.fromhex('0x1.fc1da6cc3454bp-54'),
        float.fromhex('0x1.c50ca646ffb9fp-59'),
        float.fromhex('0x1.909cc43aa0389p-64'),
        float.fromhex('0x1.5fc8d4d9146d2p-69'),
        float.fromhex('0x1.33147f0330e20p-74'),
        float.fromhex('0x1.0ab0619d70552p-79'),
        float.fromhex('0x1.cd299de521b62p-85'),
        float.fromhex('0x1.8d2ac4bbbcbf1p-90'),
        float.fromhex('0x1.54de5f6a2b43bp-95'),
        float.fromhex('0x1.23a5c85aa622fp-100'),
        float.fromhex('0x1.f1af7f77f257dp-106'),
        float.fromhex('0x1.a79442650bea5p-111'),
        float.fromhex('0x1.67b09a6776323p-116'),
        float.fromhex('0x1.30ce5978a80d3p-121'),
        float.fromhex('0x1.01cef9efcb4dbp-126'),
        float.fromhex('0x1.b35b92c55cbccp-132'),
        float.fromhex('0x1.6f00cff4c8f1ap-137'),
        float.fromhex('0x1.34ec549b0df44p-142'),
        float.fromhex('0x1.03ad8aacece51p-147'),
        float.fromhex('0x1.b4023c6eb9de8p-153'),
        float.fromhex('0x1.6d9a239494787p-158'),
        float.fromhex('0x1.32395eb43730bp-163'),
        float.fromhex('0x1.00390e238ecb8p-168'),
        float.fromhex('0x1.ac5a705c7eac4p-174'),
        float.fromhex('0x1.65bb4a8ab5cb3p-179'),
        float.fromhex('0x1.2a7ea73ade61fp-184'),
        float.fromhex('0x1.f1ba29cab2d3dp-190'),
        float.fromhex('0x1.9ea6327b2bf45p-195'),
        float.fromhex('0x1.592f9246bd4bep-200'),
        float.fromhex('0x1.1f29011724618p-205'),
        float.fromhex('0x1.dd768ebfdb2fap-211'),
        float.fromhex('0x1.8cb144642b8ffp-216'),
        float.fromhex('0x1.4963af436d9dap-221'),
    ),
    'blk_inv_ddquad': (
        float.fromhex('0x1.1566abc011567p-12'),
        float.fromhex('0x1.4ce19ae67b348p-16'),
        float.fromhex('0x1.0cfeb60f94b0ep-20'),
        float.fromhex('0x1.6b2074bd5301fp-25'),
        float.fromhex('0x1.b96d79892884cp-30'),
        float.fromhex('0x1.f4e86894f9409p-35'),
        float.fromhex('0x1.0ead639b888cap-39'),
        float.fromhex('0x1.1a16a4af20147p-44'),
        float.fromhex('0x1.1dd0add2dd6fap-49'),
        float.fromhex('0x1.1b27e7ec5fd43p-54'),
        float.fromhex('0x1.136bc6e84e26ep-59'),
        float.fromhex('0x1.07d69fa2cf51ep-64'),
        float.fromhex('0x1.f3014e652f6f3p-70'),
        float.fromhex('0x1.d2b4aad384950p-75'),
        float.fromhex('0x1.b0570406cf9acp-80'),
        float.fromhex('0x1.8d2ac4bbbcbf1p-85'),
        float.fromhex('0x1.6a2c4560cdf7ep-90'),
        float.fromhex('0x1.481a8165fae75p-95'),
        float.fromhex('0x1.278033af37e42p-100'),
        float.fromhex('0x1.08bca97f27727p-105'),
        float.fromhex('0x1.d817caa7cb21ep-111'),
        float.fromhex('0x1.a31bbb05e7121p-116'),
        float.fromhex('0x1.72998748b43fap-121'),
        float.fromhex('0x1.4684ae14058d9p-126'),
        float.fromhex('0x1.1eb8a2773cfcdp-131'),
        float.fromhex('0x1.f600097bf6acfp-137'),
        float.fromhex('0x1.b634da03cfc28p-142'),
        float.fromhex('0x1.7d81f4e0e2a2bp-147'),
        float.fromhex('0x1.4b53b03ea68d2p-152'),
        float.fromhex('0x1.1f15c8c8f3bdap-157'),
        float.fromhex('0x1.f06e8b64e4aa5p-163'),
        float.fromhex('0x1.ac5a705c7eac4p-168'),
        float.fromhex('0x1.70e924df0b799p-173'),
        float.fromhex('0x1.3d2691ae8c481p-178'),
        float.fromhex('0x1.1031cedad9cbdp-183'),
        float.fromhex('0x1.d27af8ca9172ep-189'),
        float.fromhex('0x1.8f1f0121cadfcp-194'),
        float.fromhex('0x1.5500b14b7b33dp-199'),
        float.fromhex('0x1.22f43efce9911p-204'),
        float.fromhex('0x1.efdd957d3673fp-210'),
        float.fromhex('0x1.a607b88e64720p-215'),
        float.fromhex('0x1.66c59645bf4bap-220'),
    ),
}
